"""Cubic Jordan algebra engine.

A model is presented by its unit, a cubic norm (as a black-box exact
evaluator) and its sharp map (as a sparse structure-constant table).
Everything else -- partial polarization, trace forms, cross product,
U-operators, inverses, generic minimal polynomials -- is derived.

The partial polarization dN(x, y) is recovered from two norm
evaluations: for a cubic form, N(x + ty) = N(x) + t dN(x,y) +
t^2 dN(y,x) + t^3 N(y), so dN(x,y) = (N(x+y) - N(x-y))/2 - N(y).
Trace data (the linear trace vector and the bilinear Gram matrix) is
cached eagerly at construction, which keeps models safe for shared
read-only use.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ModelMismatch, NotInvertible
from .polys import cubic_disc


def sharp_table_from_map(field, dim, sharp_fn):
    """Structure constants {(i,j): ((k, c), ...)} of a quadratic map.

    Exact for quadratic maps: the diagonal entries are sharp(e_i), the
    off-diagonal ones the linearization sharp(e_i+e_j) - sharp(e_i) - sharp(e_j).
    """
    basis = [
        tuple(field.one if i == j else field.zero for j in range(dim))
        for i in range(dim)
    ]
    diag = [sharp_fn(e) for e in basis]
    table = {}

    def sparsify(vec):
        return tuple((k, c) for k, c in enumerate(vec) if not field.is_zero(c))

    for i in range(dim):
        entry = sparsify(diag[i])
        if entry:
            table[(i, i)] = entry
    for i in range(dim):
        for j in range(i + 1, dim):
            s = sharp_fn(tuple(field.add(a, b) for a, b in zip(basis[i], basis[j])))
            vec = [
                field.sub(field.sub(a, b), c) for a, b, c in zip(s, diag[i], diag[j])
            ]
            entry = sparsify(vec)
            if entry:
                table[(i, j)] = entry
    return table


@dataclass
class GenericMinPoly:
    """m_x(T) = T^3 - c2 T^2 + c1 T - c0, with its discriminant."""

    c2: object
    c1: object
    c0: object
    disc: object
    etale: bool


class CubicJordanModel:
    def __init__(self, field, dim, unit, norm_fn, sharp_table, _trace_cache=None):
        self.field = field
        self.dim = dim
        self.unit = tuple(unit)
        self._norm_fn = norm_fn
        self.sharp_table = sharp_table
        self._two = field.from_int(2)
        if _trace_cache is not None:
            self.trace_vec, self.trace_gram = _trace_cache
        else:
            self.trace_vec, self.trace_gram = self._build_trace_cache()

    # -- element plumbing ------------------------------------------------

    def _check(self, x):
        if len(x) != self.dim:
            raise ModelMismatch(
                f"element of length {len(x)} in a {self.dim}-dimensional model"
            )
        return x

    def zero_element(self):
        return (self.field.zero,) * self.dim

    def basis(self):
        F = self.field
        return [
            tuple(F.one if i == j else F.zero for j in range(self.dim))
            for i in range(self.dim)
        ]

    def add(self, x, y):
        F = self.field
        return tuple(F.add(a, b) for a, b in zip(self._check(x), self._check(y)))

    def sub(self, x, y):
        F = self.field
        return tuple(F.sub(a, b) for a, b in zip(self._check(x), self._check(y)))

    def neg(self, x):
        F = self.field
        return tuple(F.neg(a) for a in self._check(x))

    def scale(self, c, x):
        F = self.field
        return tuple(F.mul(c, a) for a in self._check(x))

    def is_zero(self, x) -> bool:
        F = self.field
        return all(F.is_zero(a) for a in x)

    def rand(self, rng):
        F = self.field
        return tuple(F.rand(rng) for _ in range(self.dim))

    def rand_invertible(self, rng):
        for _ in range(1000):
            x = self.rand(rng)
            if not self.field.is_zero(self.norm(x)):
                return x
        raise NotInvertible("could not sample an invertible element")

    def render(self, x) -> list:
        F = self.field
        return [F.render(a) for a in x]

    def parse(self, coords) -> tuple:
        F = self.field
        vals = tuple(F.parse(str(c)) for c in coords)
        return self._check(vals)

    # -- cubic structure ---------------------------------------------------

    def norm(self, x):
        return self._norm_fn(self._check(x))

    def dnorm(self, x, y):
        """Partial polarization: quadratic in x, linear in y."""
        F = self.field
        plus = self.norm(self.add(x, y))
        minus = self.norm(self.sub(x, y))
        half = F.inv(self._two)
        return F.sub(F.mul(F.sub(plus, minus), half), self.norm(y))

    def sharp(self, x):
        F = self.field
        x = self._check(x)
        out = [F.zero] * self.dim
        for (i, j), vec in self.sharp_table.items():
            m = F.mul(x[i], x[j])
            if F.is_zero(m):
                continue
            for k, c in vec:
                out[k] = F.add(out[k], F.mul(m, c))
        return tuple(out)

    def cross(self, x, y):
        """Linearization of sharp: (x+y)# - x# - y#, evaluated directly."""
        F = self.field
        x, y = self._check(x), self._check(y)
        out = [F.zero] * self.dim
        for (i, j), vec in self.sharp_table.items():
            if i == j:
                m = F.mul(self._two, F.mul(x[i], y[i]))
            else:
                m = F.add(F.mul(x[i], y[j]), F.mul(x[j], y[i]))
            if F.is_zero(m):
                continue
            for k, c in vec:
                out[k] = F.add(out[k], F.mul(m, c))
        return tuple(out)

    def cross_matrix(self, w):
        """Matrix of y -> cross(w, y), assembled in one pass over the table."""
        F = self.field
        self._check(w)
        cols = [[F.zero] * self.dim for _ in range(self.dim)]
        for (i, j), vec in self.sharp_table.items():
            if i == j:
                wi = F.mul(self._two, w[i])
                if not F.is_zero(wi):
                    col = cols[i]
                    for k, c in vec:
                        col[k] = F.add(col[k], F.mul(wi, c))
            else:
                wi, wj = w[i], w[j]
                if not F.is_zero(wi):
                    col = cols[j]
                    for k, c in vec:
                        col[k] = F.add(col[k], F.mul(wi, c))
                if not F.is_zero(wj):
                    col = cols[i]
                    for k, c in vec:
                        col[k] = F.add(col[k], F.mul(wj, c))
        return [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)]

    def _build_trace_cache(self):
        F = self.field
        basis = self.basis()
        one = self.unit
        tvec = [self.dnorm(one, e) for e in basis]
        gram = []
        for i in range(self.dim):
            ei = basis[i]
            one_plus = self.add(one, ei)
            row = []
            for j in range(self.dim):
                ej = basis[j]
                lin = F.sub(
                    F.sub(self.dnorm(one_plus, ej), tvec[j]), self.dnorm(ei, ej)
                )
                row.append(F.sub(F.mul(tvec[i], tvec[j]), lin))
            gram.append(row)
        return tvec, gram

    def trace(self, x):
        return self.field.dot(self.trace_vec, self._check(x))

    def trace_pair(self, x, y):
        F = self.field
        gy = [F.dot(row, self._check(y)) for row in self.trace_gram]
        return F.dot(self._check(x), gy)

    def trace_forms(self, x, y):
        return self.trace(x), self.trace_pair(x, y)

    # -- derived quadratic Jordan structure --------------------------------

    def u_op(self, x, y):
        """U_x y = T(x,y) x - sharp(x) x y."""
        F = self.field
        t = self.trace_pair(x, y)
        cx = self.cross(self.sharp(x), y)
        return tuple(F.sub(F.mul(t, a), b) for a, b in zip(x, cx))

    def u_matrix(self, x):
        F = self.field
        x = self._check(x)
        gx = [F.dot(row, x) for row in self.trace_gram]
        C = self.cross_matrix(self.sharp(x))
        return [
            [F.sub(F.mul(gx[j], x[k]), C[k][j]) for j in range(self.dim)]
            for k in range(self.dim)
        ]

    def triple(self, x, y, z):
        """{x, y, z} = U_{x+z} y - U_x y - U_z y."""
        a = self.u_op(self.add(x, z), y)
        b = self.u_op(x, y)
        c = self.u_op(z, y)
        return self.sub(self.sub(a, b), c)

    def square(self, x):
        return self.u_op(x, self.unit)

    def inverse(self, x):
        n = self.norm(x)
        if self.field.is_zero(n):
            raise NotInvertible("norm is 0")
        return self.scale(self.field.inv(n), self.sharp(x))

    def min_poly(self, x) -> GenericMinPoly:
        """Generic minimal polynomial T^3 - T(x) T^2 + T(x#) T - N(x)."""
        F = self.field
        c2 = self.trace(x)
        c1 = self.trace(self.sharp(x))
        c0 = self.norm(x)
        disc = cubic_disc(F, F.neg(c0), c1, F.neg(c2))
        return GenericMinPoly(c2, c1, c0, disc, not F.is_zero(disc))

    def min_poly_value(self, x):
        """m_x(x) in the algebra, with x^2 := U_x 1 and x^3 := U_x x."""
        mp = self.min_poly(x)
        x2 = self.square(x)
        x3 = self.u_op(x, x)
        out = self.sub(x3, self.scale(mp.c2, x2))
        out = self.add(out, self.scale(mp.c1, x))
        return self.sub(out, self.scale(mp.c0, self.unit))

    # -- mutation hook for fault-injection tests ---------------------------

    def with_corrupted_sharp(self, rng):
        """Copy of the model with one sharp structure constant perturbed."""
        keys = sorted(self.sharp_table.keys())
        key = keys[rng.randrange(len(keys))]
        vec = list(self.sharp_table[key])
        F = self.field
        delta = F.rand_nonzero(rng)
        pos = rng.randrange(len(vec) + 1)
        if pos < len(vec):
            k, c = vec[pos]
            new_c = F.add(c, delta)
            vec[pos] = (k, new_c)
            vec = [(k2, c2) for k2, c2 in vec if not F.is_zero(c2)]
        else:
            k = rng.randrange(self.dim)
            vec.append((k, delta))
        table = dict(self.sharp_table)
        table[key] = tuple(vec)
        return CubicJordanModel(
            self.field,
            self.dim,
            self.unit,
            self._norm_fn,
            table,
            _trace_cache=(self.trace_vec, self.trace_gram),
        )

    def __repr__(self):
        return f"<CubicJordanModel dim={self.dim} over {self.field.describe()}>"


class QuadraticJordanView:
    """A unital quadratic Jordan structure: a unit and the U-operator.

    Both cubic models and their isotopes expose this interface; the
    quadratic axiom suite runs against it.
    """

    def __init__(self, field, dim, unit, u_op, u_matrix, rand):
        self.field = field
        self.dim = dim
        self.unit = tuple(unit)
        self.u_op = u_op
        self.u_matrix = u_matrix
        self.rand = rand

    def add(self, x, y):
        F = self.field
        return tuple(F.add(a, b) for a, b in zip(x, y))

    def sub(self, x, y):
        F = self.field
        return tuple(F.sub(a, b) for a, b in zip(x, y))

    def triple(self, x, y, z):
        a = self.u_op(self.add(x, z), y)
        return self.sub(self.sub(a, self.u_op(x, y)), self.u_op(z, y))

    def render(self, x):
        F = self.field
        return [F.render(a) for a in x]


def quadratic_view(model: CubicJordanModel) -> QuadraticJordanView:
    return QuadraticJordanView(
        model.field, model.dim, model.unit, model.u_op, model.u_matrix, model.rand
    )
