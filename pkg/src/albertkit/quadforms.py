"""Quadratic forms over exact fields and over etale cubic coefficients.

A form is a symmetric Gram matrix G with q(x) = x^T G x.  Over finite
fields the classification by (rank, discriminant square class) is
complete; the Witt index is computed independently by splitting off
hyperbolic planes and reported as a redundant cross-check.

E-valued forms (the Springer form lives over the subalgebra E) are
handled by decomposing E tensor F_p into its field factors and working
componentwise; isometry decisions are only ever made over finite fields.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .deg3 import discriminant_algebra, residue_factors
from .errors import ConfigError, NotSplitModel, UnsupportedSubalgebra
from .fields import SquareTag
from .rng import spawn
from .springer import e_module_basis, e_valued_gram
from .tits import TitsModel


class QuadraticForm:
    def __init__(self, field, gram):
        self.field = field
        self.gram = [list(row) for row in gram]
        self.dim = len(self.gram)
        for i in range(self.dim):
            for j in range(self.dim):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ConfigError("Gram matrix must be symmetric")

    def evaluate(self, v):
        F = self.field
        gv = linalg.mat_vec(F, self.gram, list(v))
        return F.dot(list(v), gv)

    def bilinear(self, u, v):
        """B(u, v) = u^T G v, so B(x, x) = q(x)."""
        F = self.field
        return F.dot(list(u), linalg.mat_vec(F, self.gram, list(v)))

    def congruent(self, P) -> "QuadraticForm":
        F = self.field
        Pt = linalg.transpose(P)
        return QuadraticForm(F, linalg.mat_mul(F, Pt, linalg.mat_mul(F, self.gram, P)))

    def __repr__(self):
        return f"<QuadraticForm dim={self.dim} over {self.field.describe()}>"


def hyperbolic_gram(F):
    return [[F.zero, F.one], [F.one, F.zero]]


def block_diagonal(F, blocks):
    n = sum(len(b) for b in blocks)
    out = [[F.zero] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return out


def diagonalize(form: QuadraticForm):
    """Exact symmetric reduction: returns (diag, P) with P^T G P = diag(diag).

    Zero blocks are left in place (as zero diagonal entries), so the input
    may be degenerate.
    """
    F = form.field
    n = form.dim
    G = [list(row) for row in form.gram]
    P = linalg.identity(F, n)

    def add_col(dst, src, c):
        # basis e_dst <- e_dst + c e_src
        for k in range(n):
            G[k][dst] = F.add(G[k][dst], F.mul(c, G[k][src]))
        for k in range(n):
            G[dst][k] = F.add(G[dst][k], F.mul(c, G[src][k]))
        for k in range(n):
            P[k][dst] = F.add(P[k][dst], F.mul(c, P[k][src]))

    def swap(i, j):
        for k in range(n):
            G[k][i], G[k][j] = G[k][j], G[k][i]
        G[i], G[j] = G[j], G[i]
        for k in range(n):
            P[k][i], P[k][j] = P[k][j], P[k][i]

    for r in range(n):
        if F.is_zero(G[r][r]):
            pivot = next(
                (j for j in range(r + 1, n) if not F.is_zero(G[j][j])), None
            )
            if pivot is not None:
                swap(r, pivot)
            else:
                pair = next(
                    (
                        (i, j)
                        for i in range(r, n)
                        for j in range(i + 1, n)
                        if not F.is_zero(G[i][j])
                    ),
                    None,
                )
                if pair is None:
                    break  # remaining block is identically zero
                i, j = pair
                add_col(i, j, F.one)
                if i != r:
                    swap(r, i)
        inv = F.inv(G[r][r])
        for i in range(r + 1, n):
            if not F.is_zero(G[i][r]):
                add_col(i, r, F.neg(F.mul(G[i][r], inv)))
    return [G[i][i] for i in range(n)], P


@dataclass
class WittInvariants:
    rank: int
    disc: object
    disc_class: SquareTag | None
    witt_index: int

    def summary(self):
        disc_class = self.disc_class.value if self.disc_class else None
        return {
            "rank": self.rank,
            "disc_class": disc_class,
            "witt_index": self.witt_index,
        }

    def same_class(self, other) -> bool:
        return (
            self.rank == other.rank
            and self.disc_class == other.disc_class
            and self.witt_index == other.witt_index
        )


def witt_invariants(form: QuadraticForm) -> WittInvariants:
    """(rank, discriminant square class, Witt index) over a finite field."""
    F = form.field
    if not F.finite:
        raise ConfigError("Witt invariants are only decided over finite fields")
    diag, _ = diagonalize(form)
    nonzero = [d for d in diag if not F.is_zero(d)]
    rank = len(nonzero)
    disc = F.one
    for d in nonzero:
        disc = F.mul(disc, d)
    disc_class = F.square_class(disc) if rank else None
    return WittInvariants(rank, disc, disc_class, _witt_index(F, nonzero))


def _witt_index(F, diag_entries):
    n = len(diag_entries)
    if n < 2:
        return 0
    G = [[diag_entries[i] if i == j else F.zero for j in range(n)] for i in range(n)]
    count = 0
    while len(G) >= 2:
        form = QuadraticForm(F, G)
        v = isotropic_vector(form, ("witt", len(G)))
        if v is None:
            break
        u = next(
            (
                e
                for e in linalg.identity(F, len(G))
                if not F.is_zero(form.bilinear(v, e))
            ),
            None,
        )
        assert u is not None, "nondegenerate form pairs v with some basis vector"
        b = form.bilinear(v, u)
        u1 = linalg.vec_scale(F, F.inv(b), list(u))
        qu1 = form.evaluate(u1)
        # q(u1 + t v) = q(u1) + 2 t B(u1, v): kill the value with t = -q(u1)/2
        t = F.neg(F.div(qu1, F.from_int(2)))
        u2 = linalg.vec_add(F, u1, linalg.vec_scale(F, t, list(v)))
        rows = []
        for e in linalg.identity(F, len(G)):
            w = linalg.vec_sub(
                F, list(e), linalg.vec_scale(F, form.bilinear(e, u2), list(v))
            )
            w = linalg.vec_sub(F, w, linalg.vec_scale(F, form.bilinear(e, v), u2))
            rows.append(w)
        basis = _independent_subset(F, rows, len(G) - 2)
        G = [[form.bilinear(a, b2) for b2 in basis] for a in basis]
        count += 1
    return count


def _independent_subset(F, rows, k):
    out = []
    for r in rows:
        if len(out) == k:
            break
        if linalg.rank(F, out + [r]) == len(out) + 1:
            out.append(r)
    if len(out) != k:
        raise ArithmeticError("could not complete an independent subset")
    return out


def isotropic_vector(form: QuadraticForm, seed=0):
    """A nonzero v with q(v) = 0 over a finite field, or None.

    Forms of rank >= 3 are always isotropic: restrict to three diagonal
    directions and solve the ternary conic by randomized square-root
    extraction.  Rank <= 2 is decided exactly.  Every output is
    re-verified before it is returned.
    """
    F = form.field
    if not F.finite:
        raise ConfigError("isotropic search runs over finite fields")
    n = form.dim
    if n == 0:
        return None
    diag, P = diagonalize(form)
    cols = linalg.transpose(P)

    def back(vec_diag):
        out = [F.zero] * n
        for c, col in zip(vec_diag, cols):
            out = linalg.vec_add(F, out, linalg.vec_scale(F, c, col))
        v = tuple(out)
        assert not all(F.is_zero(x) for x in v)
        assert F.is_zero(form.evaluate(v))
        return v

    for i, d in enumerate(diag):
        if F.is_zero(d):
            e = [F.zero] * n
            e[i] = F.one
            return back(e)
    if n == 1:
        return None
    if n == 2:
        ratio = F.neg(F.div(diag[0], diag[1]))
        if not F.is_square(ratio):
            return None
        y = F.sqrt(ratio)
        e = [F.one, y]
        return back(e)
    rng = spawn(seed, "conic")
    idx = sorted(rng.sample(range(n), 3))
    da, db, dc = (diag[i] for i in idx)
    for _ in range(500):
        y, z = F.rand(rng), F.rand(rng)
        if F.is_zero(y) and F.is_zero(z):
            continue
        val = F.neg(
            F.div(F.add(F.mul(db, F.mul(y, y)), F.mul(dc, F.mul(z, z))), da)
        )
        if F.is_zero(val):
            e = [F.zero] * n
            e[idx[1]], e[idx[2]] = y, z
            return back(e)
        if F.is_square(val):
            x = F.sqrt(val)
            e = [F.zero] * n
            e[idx[0]], e[idx[1]], e[idx[2]] = x, y, z
            return back(e)
    raise ArithmeticError("conic solver exhausted its draws")


class EValuedForm:
    """Quadratic form with entries in an etale cubic algebra E."""

    def __init__(self, E, gram):
        self.E = E
        self.gram = gram
        self.dim = len(gram)

    def evaluate(self, coords):
        E = self.E
        acc = E.zero
        for i in range(self.dim):
            for j in range(self.dim):
                acc = E.add(acc, E.mul(coords[i], E.mul(self.gram[i][j], coords[j])))
        return acc

    def map_factor(self, factor) -> QuadraticForm:
        g = [
            [factor.sigma(self.gram[i][j]) for j in range(self.dim)]
            for i in range(self.dim)
        ]
        return QuadraticForm(factor.field, g)


def polarize(emb, data) -> tuple:
    """Assemble the Springer form as an E-valued form on a free E-basis.

    Returns (generators, form); the expected E-rank for a 27-dimensional
    model is 8.
    """
    gens = e_module_basis(emb, data)
    return gens, EValuedForm(emb.E, e_valued_gram(emb, data, gens))


def expected_discr_invariants(E, factor) -> WittInvariants:
    """Invariants of <1, -d> + 3h over the residue factor, d = disc(E)."""
    F = E.field
    k = factor.field
    d = discriminant_algebra(E).d
    d_img = factor.sigma(E.scale(d, E.unit))
    binary = [[k.one, k.zero], [k.zero, k.neg(d_img)]]
    gram = block_diagonal(
        k, [binary, hyperbolic_gram(k), hyperbolic_gram(k), hyperbolic_gram(k)]
    )
    return witt_invariants(QuadraticForm(k, gram))


def lemma_discr_check(model, emb, data) -> dict:
    """Per residue factor, compare the Springer form's invariants with the
    independently computed invariants of <1, -d> + 3h."""
    if not isinstance(model, TitsModel) or model.algebra.kind != "mat3":
        raise NotSplitModel("the decomposition check runs on the split 27-dim model")
    if not model.field.finite:
        raise NotSplitModel("the decomposition check runs over a prime field")
    if emb.label not in ("diagonal-mat3", "companion"):
        raise UnsupportedSubalgebra(f"unsupported subalgebra {emb.label!r}")
    gens, form = polarize(emb, data)
    factors = residue_factors(emb.E)
    results = []
    for i, factor in enumerate(factors):
        actual = witt_invariants(form.map_factor(factor))
        expected = expected_discr_invariants(emb.E, factor)
        results.append(
            {
                "factor": i,
                "degree": factor.degree,
                "computed": actual.summary(),
                "expected": expected.summary(),
                "passed": actual.same_class(expected),
            }
        )
    return {
        "e_rank": form.dim,
        "factors": results,
        "passed": form.dim == 8 and all(r["passed"] for r in results),
    }
