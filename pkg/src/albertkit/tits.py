"""First Tits construction.

Given a degree-3 associative algebra A and an invertible scalar lam, the
module A + A + A carries a cubic Jordan structure:

    1 = (1, 0, 0)
    N(a0, a1, a2) = N(a0) + lam N(a1) + lam^-1 N(a2) - T(a0 a1 a2)
    (a0, a1, a2)# = (a0# - a1 a2, lam^-1 a2# - a0 a1, lam a1# - a2 a0)

For noncommutative A the product order in each term matters and is kept
exactly as written.  With A = 3x3 matrices this yields the split
27-dimensional exceptional Jordan algebra (the split Albert algebra).
"""

from __future__ import annotations

from .deg3 import Deg3Algebra
from .errors import AlgebraMismatch, NotCommutative, NotInvertible, ZeroLambda
from .isotopy import StructureWord, UOpLetter, eval_word
from .jordan import CubicJordanModel, sharp_table_from_map


class TitsModel(CubicJordanModel):
    """Cubic Jordan model on A + A + A with the construction data attached."""

    def __init__(self, algebra: Deg3Algebra, lam):
        F = algebra.field
        if F.is_zero(lam):
            raise ZeroLambda("the construction scalar must be invertible")
        self.algebra = algebra
        self.lam = lam
        self.lam_inv = F.inv(lam)
        d = algebra.dim
        dim = 3 * d

        unit = algebra.unit + algebra.zero + algebra.zero

        def slots(x):
            return x[:d], x[d : 2 * d], x[2 * d :]

        def norm_fn(x):
            a0, a1, a2 = slots(x)
            prod = algebra.mul(algebra.mul(a0, a1), a2)
            out = F.add(algebra.norm(a0), F.mul(lam, algebra.norm(a1)))
            out = F.add(out, F.mul(self.lam_inv, algebra.norm(a2)))
            return F.sub(out, algebra.trace(prod))

        def sharp_fn(x):
            a0, a1, a2 = slots(x)
            s0 = algebra.sub(algebra.sharp(a0), algebra.mul(a1, a2))
            s1 = algebra.sub(
                algebra.scale(self.lam_inv, algebra.sharp(a2)), algebra.mul(a0, a1)
            )
            s2 = algebra.sub(
                algebra.scale(lam, algebra.sharp(a1)), algebra.mul(a2, a0)
            )
            return s0 + s1 + s2

        table = sharp_table_from_map(F, dim, sharp_fn)
        super().__init__(F, dim, unit, norm_fn, table)

    # -- slot plumbing ----------------------------------------------------

    def assemble(self, a0, a1, a2):
        d = self.algebra.dim
        for a in (a0, a1, a2):
            if len(a) != d:
                raise AlgebraMismatch("slot entry of wrong dimension")
        return tuple(a0) + tuple(a1) + tuple(a2)

    def slots(self, x):
        d = self.algebra.dim
        self._check(x)
        return x[:d], x[d : 2 * d], x[2 * d :]

    def embed_first_slot(self, a):
        """A as the subalgebra (a, 0, 0); norm, trace and sharp restrict."""
        if len(a) != self.algebra.dim:
            raise AlgebraMismatch("element does not live in the coefficient algebra")
        z = self.algebra.zero
        return self.assemble(a, z, z)

    def descriptor(self) -> dict:
        return {
            "construction": "tits1",
            "algebra": self.algebra.descriptor(),
            "lambda": self.field.render(self.lam),
        }

    def __repr__(self):
        return (
            f"<TitsModel A={self.algebra.kind} lam={self.field.render(self.lam)} "
            f"dim={self.dim} over {self.field.describe()}>"
        )


def tits_first(algebra: Deg3Algebra, lam) -> TitsModel:
    return TitsModel(algebra, lam)


def lemma_trans_move(model: TitsModel, y):
    """The transitivity move taking an invertible y of E into the unit orbit.

    For commutative E and invertible y in the first slot,
    U_(0,0,1) U_(0,y,0) applied to (y,0,0) equals N(y) * 1, so the word
    followed by the scalar N(y)^-1 carries y to the unit.  Returns the
    structure word and the image, checked exactly.
    """
    E = model.algebra
    if not E.commutative:
        raise NotCommutative("the transitivity move needs a commutative algebra")
    ny = E.norm(y)
    if model.field.is_zero(ny):
        raise NotInvertible("y must be invertible in E")
    z = E.zero
    w1 = model.assemble(z, z, E.unit)
    w2 = model.assemble(z, y, z)
    word = StructureWord([UOpLetter(w1), UOpLetter(w2)])
    image = model.u_op(w1, model.u_op(w2, model.embed_first_slot(y)))
    expected = model.scale(ny, model.unit)
    if image != expected:
        raise AssertionError(
            "transitivity move did not land on N(y) * 1; "
            f"y={E.render(y)} image={model.render(image)}"
        )
    return word, image


def lemma_trans_word_map(model: TitsModel, y):
    """Full word (scalar included) mapping (y,0,0) to the unit, as a matrix."""
    E = model.algebra
    ny = E.norm(y)
    word, _ = lemma_trans_move(model, y)
    scaled = word.prepend_scalar(model.field.inv(ny))
    return eval_word(model, scaled)
