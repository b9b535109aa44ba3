"""Pydantic request/response models for the HTTP verification service.

The wire format mirrors the plain-dict run configuration the pipelines
consume; ``RunRequest.to_config()`` is the translation point.
"""

from __future__ import annotations

from typing import Any, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

Scalar = Union[str, int]


class AlgebraSpec(BaseModel):
    kind: Literal["split", "cubic", "mat3"]
    f: Optional[list[Scalar]] = None

    def to_config(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.f is not None:
            out["f"] = list(self.f)
        return out


class JordanSpec(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    construction: Literal["tits1"] = "tits1"
    algebra: AlgebraSpec = AlgebraSpec(kind="mat3")
    lam: Scalar = Field(default="1", alias="lambda")

    def to_config(self) -> dict:
        return {
            "construction": self.construction,
            "algebra": self.algebra.to_config(),
            "lambda": str(self.lam),
        }


class SubalgebraSpec(BaseModel):
    subalgebra: Literal["first-slot", "diagonal-mat3", "companion"]
    f: Optional[list[Scalar]] = None

    def to_config(self) -> dict:
        out: dict = {"subalgebra": self.subalgebra}
        if self.f is not None:
            out["f"] = list(self.f)
        return out


class MutateSpec(BaseModel):
    seed: int


class RunRequest(BaseModel):
    """One verification run; unused options are simply ignored by commands."""

    field: str = "Fp:2147483647"
    jordan: JordanSpec = JordanSpec()
    subalgebra: Optional[SubalgebraSpec] = None
    trials: Optional[int] = None
    seed: int = 0
    mutate: Optional[MutateSpec] = None
    v: Optional[list[Scalar]] = None
    slot_element: Optional[list[Scalar]] = None
    strategy: Optional[Literal["slot", "search"]] = None
    v_count: Optional[int] = None
    autotopy_samples: Optional[int] = None
    words: Optional[list[list[dict]]] = None

    def to_config(self) -> dict:
        config: dict = {
            "field": self.field,
            "jordan": self.jordan.to_config(),
            "seed": self.seed,
        }
        if self.subalgebra is not None:
            config["subalgebra"] = self.subalgebra.to_config()
        if self.trials is not None:
            config["trials"] = self.trials
        if self.mutate is not None:
            config["mutate"] = {"seed": self.mutate.seed}
        for key in ("v", "slot_element", "strategy", "v_count", "autotopy_samples", "words"):
            value = getattr(self, key)
            if value is not None:
                config[key] = value
        return config


class CheckModel(BaseModel):
    name: str
    anchor: str
    trials: int
    passed: bool
    witness: Optional[Any] = None
    detail: Optional[Any] = None


class ReportModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(alias="schema")
    command: str
    verdict: Literal["PASS", "FAIL"]
    config: dict
    checks: list[CheckModel]
    lambda_prime: Optional[list[str]] = None
    timestamp: str
