"""Randomized exact verification of the Jordan axioms.

Each axiom is a polynomial identity in the element coordinates, so exact
evaluation at seeded random points is a Schwartz-Zippel identity test:
over a 31-bit prime a single trial fails a wrong identity with
probability at least 1 - 7/p, and a thousand trials are decisive.
Failures are reported with the offending sample, never raised.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigError
from .jordan import CubicJordanModel, QuadraticJordanView, quadratic_view
from .rng import spawn


@dataclass
class CheckResult:
    name: str
    anchor: str
    trials: int
    passed: bool
    witness: dict | None = None

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "anchor": self.anchor,
            "trials": self.trials,
            "passed": self.passed,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _run_trials(name, anchor, trials, seed, one_trial, render_inputs):
    """Run one axiom; stop at the first counterexample."""
    for i in range(trials):
        rng = spawn(seed, name, i)
        inputs = one_trial(rng)
        if inputs is not None:
            return CheckResult(
                name,
                anchor,
                i + 1,
                False,
                {"trial": i, "inputs": render_inputs(inputs)},
            )
    return CheckResult(name, anchor, trials, True)


def quadratic_axiom_checks(view: QuadraticJordanView, trials: int, seed) -> list[CheckResult]:
    """The three unital quadratic Jordan axioms, evaluated pointwise."""
    if trials < 1:
        raise ConfigError("trials must be >= 1")

    def render(inputs):
        return {k: view.render(v) for k, v in inputs.items()}

    def unit_trial(rng):
        y = view.rand(rng)
        if view.u_op(view.unit, y) != y:
            return {"y": y}
        return None

    def commutation_trial(rng):
        x, y, z = view.rand(rng), view.rand(rng), view.rand(rng)
        lhs = view.triple(x, y, view.u_op(x, z))
        rhs = view.u_op(x, view.triple(y, x, z))
        if lhs != rhs:
            return {"x": x, "y": y, "z": z}
        return None

    def fundamental_trial(rng):
        x, y, z = view.rand(rng), view.rand(rng), view.rand(rng)
        lhs = view.u_op(view.u_op(x, y), z)
        rhs = view.u_op(x, view.u_op(y, view.u_op(x, z)))
        if lhs != rhs:
            return {"x": x, "y": y, "z": z}
        return None

    return [
        _run_trials("u_unit", "U_1 = id", trials, seed, unit_trial, render),
        _run_trials(
            "u_commutation",
            "{x,y,U_x z} = U_x {y,x,z}",
            trials,
            seed,
            commutation_trial,
            render,
        ),
        _run_trials(
            "u_fundamental",
            "U_{U_x y} = U_x U_y U_x",
            trials,
            seed,
            fundamental_trial,
            render,
        ),
    ]


def cubic_axiom_checks(model: CubicJordanModel, trials: int, seed) -> list[CheckResult]:
    """The cubic-structure axioms plus the cubic-shape laws of the norm."""
    if trials < 1:
        raise ConfigError("trials must be >= 1")
    F = model.field

    def render(inputs):
        out = {}
        for k, v in inputs.items():
            out[k] = F.render(v) if not isinstance(v, tuple) else model.render(v)
        return out

    def adjoint_trial(rng):
        x = model.rand(rng)
        if model.sharp(model.sharp(x)) != model.scale(model.norm(x), x):
            return {"x": x}
        return None

    def unit_trial(_rng):
        ok = model.sharp(model.unit) == model.unit and model.norm(model.unit) == F.one
        return None if ok else {"x": model.unit}

    def trace_sharp_trial(rng):
        x, y = model.rand(rng), model.rand(rng)
        if model.trace_pair(model.sharp(x), y) != model.dnorm(x, y):
            return {"x": x, "y": y}
        return None

    def unit_cross_trial(rng):
        x = model.rand(rng)
        lhs = model.cross(model.unit, x)
        rhs = model.sub(model.scale(model.trace(x), model.unit), x)
        if lhs != rhs:
            return {"x": x}
        return None

    def norm_homog_trial(rng):
        t, x = F.rand(rng), model.rand(rng)
        t3 = F.mul(t, F.mul(t, t))
        if model.norm(model.scale(t, x)) != F.mul(t3, model.norm(x)):
            return {"t": t, "x": x}
        return None

    def sharp_homog_trial(rng):
        t, x = F.rand(rng), model.rand(rng)
        t2 = F.mul(t, t)
        if model.sharp(model.scale(t, x)) != model.scale(t2, model.sharp(x)):
            return {"t": t, "x": x}
        return None

    def expansion_trial(rng):
        x, y = model.rand(rng), model.rand(rng)
        lhs = model.norm(model.add(x, y))
        rhs = F.add(
            F.add(model.norm(x), model.dnorm(x, y)),
            F.add(model.dnorm(y, x), model.norm(y)),
        )
        if lhs != rhs:
            return {"x": x, "y": y}
        return None

    return [
        _run_trials(
            "sharp_adjoint", "sharp(sharp(x)) = N(x) x", trials, seed, adjoint_trial, render
        ),
        _run_trials(
            "unit_identities", "sharp(1) = 1, N(1) = 1", 1, seed, unit_trial, render
        ),
        _run_trials(
            "trace_sharp",
            "T(sharp(x), y) = dN(x, y)",
            trials,
            seed,
            trace_sharp_trial,
            render,
        ),
        _run_trials(
            "unit_cross",
            "cross(1, x) = T(x) 1 - x",
            trials,
            seed,
            unit_cross_trial,
            render,
        ),
        _run_trials(
            "norm_homogeneity",
            "N(t x) = t^3 N(x)",
            trials,
            seed,
            norm_homog_trial,
            render,
        ),
        _run_trials(
            "sharp_homogeneity",
            "sharp(t x) = t^2 sharp(x)",
            trials,
            seed,
            sharp_homog_trial,
            render,
        ),
        _run_trials(
            "norm_expansion",
            "N(x+y) = N(x) + dN(x,y) + dN(y,x) + N(y)",
            trials,
            seed,
            expansion_trial,
            render,
        ),
    ]


def run_axiom_suite(model: CubicJordanModel, trials: int, seed) -> list[CheckResult]:
    """Quadratic axioms on the derived U-operator, then the cubic axioms."""
    checks = quadratic_axiom_checks(quadratic_view(model), trials, seed)
    checks.extend(cubic_axiom_checks(model, trials, seed))
    return checks


def all_passed(checks: list[CheckResult]) -> bool:
    return all(c.passed for c in checks)
