"""Isotopes, autotopies, and structure-group words.

An isotope J^(v) keeps the module and replaces the unit by v^-1 and U_x
by U_x U_v.  A linear map g is an autotopy when U_{g(x)} = g U_x g^-1
U_{g(1)} for all x; scalar maps and the operators U_x of invertible x
are the generators this workbench manipulates, as words evaluated to
exact matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import ConfigError, NotInvertible, SingularMap
from .jordan import CubicJordanModel, QuadraticJordanView
from .rng import spawn


class LinearMap:
    """An exact square matrix acting on Jordan element coordinates."""

    def __init__(self, field, matrix):
        self.field = field
        self.matrix = [list(row) for row in matrix]
        self.dim = len(self.matrix)

    @classmethod
    def identity(cls, field, dim):
        return cls(field, linalg.identity(field, dim))

    @classmethod
    def scalar(cls, field, dim, c):
        return cls(field, linalg.mat_scale(field, c, linalg.identity(field, dim)))

    def apply(self, v):
        return tuple(linalg.mat_vec(self.field, self.matrix, list(v)))

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        return LinearMap(self.field, linalg.mat_mul(self.field, self.matrix, other.matrix))

    def inverse(self) -> "LinearMap":
        return LinearMap(self.field, linalg.invert(self.field, self.matrix))

    def is_invertible(self) -> bool:
        return linalg.is_invertible(self.field, self.matrix)

    def __eq__(self, other):
        return isinstance(other, LinearMap) and self.matrix == other.matrix

    def __repr__(self):
        return f"<LinearMap dim={self.dim}>"


@dataclass(frozen=True)
class ScalarLetter:
    value: object


@dataclass(frozen=True)
class UOpLetter:
    element: tuple


class StructureWord:
    """A word in the generators; evaluation composes left-to-right, so the
    first letter acts last (outermost first)."""

    def __init__(self, letters):
        self.letters = list(letters)

    def prepend_scalar(self, c) -> "StructureWord":
        return StructureWord([ScalarLetter(c)] + self.letters)

    def to_json(self, model: CubicJordanModel) -> list:
        out = []
        for letter in self.letters:
            if isinstance(letter, ScalarLetter):
                out.append({"scalar": model.field.render(letter.value)})
            else:
                out.append({"u": model.render(letter.element)})
        return out

    @classmethod
    def from_json(cls, model: CubicJordanModel, data) -> "StructureWord":
        if not isinstance(data, list):
            raise ConfigError("a structure word is a JSON array of letters")
        letters = []
        for item in data:
            if not isinstance(item, dict) or len(item) != 1:
                raise ConfigError(f"malformed word letter: {item!r}")
            if "scalar" in item:
                letters.append(ScalarLetter(model.field.parse(str(item["scalar"]))))
            elif "u" in item:
                letters.append(UOpLetter(model.parse(item["u"])))
            else:
                raise ConfigError(f"unknown word letter: {item!r}")
        return cls(letters)

    def __len__(self):
        return len(self.letters)


def letter_map(model: CubicJordanModel, letter) -> LinearMap:
    F = model.field
    if isinstance(letter, ScalarLetter):
        if F.is_zero(letter.value):
            raise NotInvertible("scalar letter must be nonzero")
        return LinearMap.scalar(F, model.dim, letter.value)
    if isinstance(letter, UOpLetter):
        if F.is_zero(model.norm(letter.element)):
            raise NotInvertible("U-letter needs an invertible element")
        return LinearMap(F, model.u_matrix(letter.element))
    raise ConfigError(f"unknown letter type: {letter!r}")


def eval_word(model: CubicJordanModel, word: StructureWord) -> LinearMap:
    out = LinearMap.identity(model.field, model.dim)
    for letter in word.letters:
        out = out.compose(letter_map(model, letter))
    return out


def isotope(model: CubicJordanModel, v) -> QuadraticJordanView:
    """J^(v): unit v^-1, U'_x = U_x U_v, for invertible v."""
    F = model.field
    if F.is_zero(model.norm(v)):
        raise NotInvertible("isotope needs an invertible v")
    u_v = model.u_matrix(v)

    def u_op(x, y):
        return model.u_op(x, tuple(linalg.mat_vec(F, u_v, list(y))))

    def u_matrix(x):
        return linalg.mat_mul(F, model.u_matrix(x), u_v)

    return QuadraticJordanView(
        F, model.dim, model.inverse(v), u_op, u_matrix, model.rand
    )


@dataclass
class AutotopyResult:
    ok: bool
    samples: int
    witness: dict | None = None

    def __bool__(self):
        return self.ok


def is_autotopy(model: CubicJordanModel, g: LinearMap, trials: int = 32, seed=0) -> AutotopyResult:
    """Sampled exact test of U_{g(x)} = g U_x g^-1 U_{g(1)}.

    Each sample compares both sides as matrices.  The identity is
    polynomial in x, so a map that fails it is caught by the first few
    samples except with probability O(degree/p) per sample.
    """
    F = model.field
    g_inv = g.inverse()  # raises SingularMap on singular input
    u_g1 = model.u_matrix(g.apply(model.unit))
    suffix = linalg.mat_mul(F, g_inv.matrix, u_g1)
    for i in range(trials):
        rng = spawn(seed, "autotopy", i)
        x = model.rand(rng)
        lhs = model.u_matrix(g.apply(x))
        rhs = linalg.mat_mul(
            F, g.matrix, linalg.mat_mul(F, model.u_matrix(x), suffix)
        )
        if lhs != rhs:
            return AutotopyResult(False, i + 1, {"x": model.render(x)})
    return AutotopyResult(True, trials)


def random_invertible_map(model: CubicJordanModel, rng) -> LinearMap:
    F = model.field
    for _ in range(100):
        mat = [[F.rand(rng) for _ in range(model.dim)] for _ in range(model.dim)]
        if linalg.is_invertible(F, mat):
            return LinearMap(F, mat)
    raise SingularMap("could not sample an invertible matrix")
