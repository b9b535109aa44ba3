"""Degree-3 associative algebras over the ground field.

Three presentations, each with norm N, trace T, and adjoint a#:

* ``SplitEtale`` -- k x k x k with componentwise operations;
* ``CubicQuotient`` -- k[t]/(f) for a separable monic cubic f;
* ``Matrix3`` -- 3x3 matrices, stored row-major as length-9 tuples.

Elements are plain coordinate tuples; the algebra object owns the
operations.  The adjoint satisfies a * a# = N(a) * 1 in every kind,
so inversion is a# / N(a).
"""

from __future__ import annotations

from . import linalg
from .errors import AlgebraMismatch, ConfigError, NotCommutative, NotEtale, NotInvertible
from .fields import ExtensionField, PrimeField
from .polys import cubic_disc, factor_cubic


class Deg3Algebra:
    """Common element-level helpers; subclasses implement the structure."""

    field = None
    dim = 0
    kind = ""
    commutative = True

    def _check(self, a):
        if len(a) != self.dim:
            raise AlgebraMismatch(
                f"element of length {len(a)} in a {self.dim}-dimensional algebra"
            )
        return a

    @property
    def zero(self):
        return (self.field.zero,) * self.dim

    def basis(self):
        F = self.field
        return [
            tuple(F.one if i == j else F.zero for j in range(self.dim))
            for i in range(self.dim)
        ]

    def add(self, a, b):
        F = self.field
        return tuple(F.add(x, y) for x, y in zip(self._check(a), self._check(b)))

    def sub(self, a, b):
        F = self.field
        return tuple(F.sub(x, y) for x, y in zip(self._check(a), self._check(b)))

    def neg(self, a):
        F = self.field
        return tuple(F.neg(x) for x in self._check(a))

    def scale(self, c, a):
        F = self.field
        return tuple(F.mul(c, x) for x in self._check(a))

    def is_zero(self, a) -> bool:
        F = self.field
        return all(F.is_zero(x) for x in a)

    def norm_trace_sharp(self, a):
        return self.norm(a), self.trace(a), self.sharp(a)

    def trace_pair(self, a, b):
        return self.trace(self.mul(a, b))

    def inv(self, a):
        n = self.norm(a)
        if self.field.is_zero(n):
            raise NotInvertible("element has norm 0")
        c = self.field.inv(n)
        return self.scale(c, self.sharp(a))

    def rand(self, rng):
        F = self.field
        return tuple(F.rand(rng) for _ in range(self.dim))

    def rand_invertible(self, rng):
        for _ in range(1000):
            a = self.rand(rng)
            if not self.field.is_zero(self.norm(a)):
                return a
        raise NotInvertible("could not sample an invertible element")

    def render(self, a) -> list:
        F = self.field
        return [F.render(x) for x in a]

    def parse(self, coords) -> tuple:
        F = self.field
        vals = tuple(F.parse(str(c)) for c in coords)
        return self._check(vals)


class SplitEtale(Deg3Algebra):
    kind = "split"
    dim = 3
    commutative = True

    def __init__(self, field):
        self.field = field

    @property
    def unit(self):
        one = self.field.one
        return (one, one, one)

    def mul(self, a, b):
        F = self.field
        return tuple(F.mul(x, y) for x, y in zip(self._check(a), self._check(b)))

    def norm(self, a):
        F = self.field
        a = self._check(a)
        return F.mul(F.mul(a[0], a[1]), a[2])

    def trace(self, a):
        F = self.field
        a = self._check(a)
        return F.add(F.add(a[0], a[1]), a[2])

    def sharp(self, a):
        F = self.field
        a = self._check(a)
        return (F.mul(a[1], a[2]), F.mul(a[0], a[2]), F.mul(a[0], a[1]))

    def descriptor(self) -> dict:
        return {"kind": "split"}

    def __repr__(self):
        return f"SplitEtale({self.field!r})"


class CubicQuotient(Deg3Algebra):
    """k[t]/(t^3 + c2 t^2 + c1 t + c0), separable."""

    kind = "cubic"
    dim = 3
    commutative = True

    def __init__(self, field, c0, c1, c2):
        self.field = field
        self.f = (c0, c1, c2)
        self.disc = cubic_disc(field, c0, c1, c2)
        if field.is_zero(self.disc):
            raise NotEtale("defining cubic has zero discriminant")

    @property
    def unit(self):
        F = self.field
        return (F.one, F.zero, F.zero)

    def mul(self, a, b):
        F = self.field
        a, b = self._check(a), self._check(b)
        conv = [F.zero] * 5
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                conv[i + j] = F.add(conv[i + j], F.mul(x, y))
        c0, c1, c2 = self.f
        # reduce t^4 then t^3 using t^3 = -c2 t^2 - c1 t - c0
        for k in (4, 3):
            c = conv[k]
            if not F.is_zero(c):
                conv[k - 1] = F.sub(conv[k - 1], F.mul(c, c2))
                conv[k - 2] = F.sub(conv[k - 2], F.mul(c, c1))
                conv[k - 3] = F.sub(conv[k - 3], F.mul(c, c0))
        return (conv[0], conv[1], conv[2])

    def _regular_matrix(self, a):
        cols = [self.mul(a, e) for e in self.basis()]
        return [[cols[j][i] for j in range(3)] for i in range(3)]

    def norm(self, a):
        return _det3(self.field, self._regular_matrix(a))

    def trace(self, a):
        F = self.field
        M = self._regular_matrix(a)
        return F.add(F.add(M[0][0], M[1][1]), M[2][2])

    def _sigma2(self, a):
        F = self.field
        M = self._regular_matrix(a)
        s = F.zero
        for i, j in ((0, 1), (0, 2), (1, 2)):
            s = F.add(
                s, F.sub(F.mul(M[i][i], M[j][j]), F.mul(M[i][j], M[j][i]))
            )
        return s

    def sharp(self, a):
        # a# = a^2 - T(a) a + sigma2(a) 1
        F = self.field
        sq = self.mul(a, a)
        t = self.trace(a)
        s2 = self._sigma2(a)
        out = self.sub(sq, self.scale(t, a))
        return self.add(out, self.scale(s2, self.unit))

    def descriptor(self) -> dict:
        F = self.field
        return {"kind": "cubic", "f": [F.render(c) for c in self.f]}

    def __repr__(self):
        return f"CubicQuotient({self.field!r}, f={self.f})"


class Matrix3(Deg3Algebra):
    kind = "mat3"
    dim = 9
    commutative = False

    def __init__(self, field):
        self.field = field

    @property
    def unit(self):
        F = self.field
        return tuple(
            F.one if i % 4 == 0 else F.zero for i in range(9)
        )

    def mul(self, a, b):
        F = self.field
        a, b = self._check(a), self._check(b)
        out = []
        for i in range(3):
            for j in range(3):
                out.append(
                    F.dot(
                        (a[3 * i], a[3 * i + 1], a[3 * i + 2]),
                        (b[j], b[3 + j], b[6 + j]),
                    )
                )
        return tuple(out)

    def norm(self, a):
        a = self._check(a)
        M = [[a[3 * i + j] for j in range(3)] for i in range(3)]
        return _det3(self.field, M)

    def trace(self, a):
        F = self.field
        a = self._check(a)
        return F.add(F.add(a[0], a[4]), a[8])

    def sharp(self, a):
        """Classical adjugate, so a * a# = det(a) * I."""
        F = self.field
        a = self._check(a)
        m = [[a[3 * i + j] for j in range(3)] for i in range(3)]

        def cof(i, j):
            rs = [r for r in range(3) if r != i]
            cs = [c for c in range(3) if c != j]
            d = F.sub(
                F.mul(m[rs[0]][cs[0]], m[rs[1]][cs[1]]),
                F.mul(m[rs[0]][cs[1]], m[rs[1]][cs[0]]),
            )
            return F.neg(d) if (i + j) % 2 else d

        out = [F.zero] * 9
        for i in range(3):
            for j in range(3):
                out[3 * i + j] = cof(j, i)
        return tuple(out)

    def from_rows(self, rows):
        return tuple(x for row in rows for x in row)

    def diagonal(self, a0, a1, a2):
        F = self.field
        z = F.zero
        return (a0, z, z, z, a1, z, z, z, a2)

    def descriptor(self) -> dict:
        return {"kind": "mat3"}

    def __repr__(self):
        return f"Matrix3({self.field!r})"


def _det3(F, M):
    return F.add(
        F.sub(
            F.mul(M[0][0], F.sub(F.mul(M[1][1], M[2][2]), F.mul(M[1][2], M[2][1]))),
            F.mul(M[0][1], F.sub(F.mul(M[1][0], M[2][2]), F.mul(M[1][2], M[2][0]))),
        ),
        F.mul(M[0][2], F.sub(F.mul(M[1][0], M[2][1]), F.mul(M[1][1], M[2][0]))),
    )


def companion_matrix(E: CubicQuotient):
    """Multiplication-by-t of E as an element of Matrix3 over the same field."""
    F = E.field
    c0, c1, c2 = E.f
    rows = [
        [F.zero, F.zero, F.neg(c0)],
        [F.one, F.zero, F.neg(c1)],
        [F.zero, F.one, F.neg(c2)],
    ]
    return tuple(x for row in rows for x in row)


def companion_embedding(E: CubicQuotient, M: Matrix3):
    """The algebra map E -> Matrix3 sending t to the companion matrix of f."""
    if E.field != M.field:
        raise AlgebraMismatch("algebras over different fields")
    C = companion_matrix(E)
    C2 = M.mul(C, C)

    def embed(a):
        E._check(a)
        out = M.scale(a[0], M.unit)
        out = M.add(out, M.scale(a[1], C))
        out = M.add(out, M.scale(a[2], C2))
        return out

    return embed


class QuadraticEtale:
    """Discriminant algebra k[s]/(s^2 - d), carried as the square class d.

    The norm form is the binary diagonal form <1, -d>; ``split`` records
    whether d is a square (so the algebra is k x k).
    """

    def __init__(self, field, d):
        if field.is_zero(d):
            raise NotEtale("discriminant must be nonzero")
        self.field = field
        self.d = d
        self.split = field.is_square(d)

    def norm_gram(self):
        F = self.field
        return [[F.one, F.zero], [F.zero, F.neg(self.d)]]

    def __repr__(self):
        return f"QuadraticEtale(d={self.d!r}, split={self.split})"


def discriminant_algebra(E: Deg3Algebra) -> QuadraticEtale:
    """The quadratic etale discriminant algebra of a commutative degree-3 algebra."""
    if not E.commutative:
        raise NotCommutative("discriminant algebra needs a commutative algebra")
    F = E.field
    if isinstance(E, SplitEtale):
        return QuadraticEtale(F, F.one)
    if isinstance(E, CubicQuotient):
        return QuadraticEtale(F, E.disc)
    raise NotCommutative(f"unsupported algebra kind {E.kind!r}")


class ResidueFactor:
    """One field factor of an etale cubic algebra over a prime field."""

    def __init__(self, field, sigma, modulus):
        self.field = field  # PrimeField or ExtensionField
        self.sigma = sigma  # algebra hom E -> field
        self.modulus = modulus  # () for a coordinate factor, poly coeffs otherwise
        self.degree = 1 if not isinstance(field, ExtensionField) else field.degree


def residue_factors(E: Deg3Algebra) -> list:
    """Decompose an etale cubic algebra over F_p into its field factors.

    SplitEtale is already a product of three copies of F_p; a cubic
    quotient splits along the irreducible factors of its modulus.  The
    factor maps sigma are surjective algebra homomorphisms.
    """
    F = E.field
    if not isinstance(F, PrimeField):
        raise NotCommutative("residue decomposition needs a prime ground field")
    if isinstance(E, SplitEtale):
        return [
            ResidueFactor(F, (lambda a, i=i: a[i]), ()) for i in range(3)
        ]
    if not isinstance(E, CubicQuotient):
        raise NotCommutative("residue decomposition needs a commutative algebra")
    factors = []
    for mod in factor_cubic(F, *E.f):
        if len(mod) == 1:
            root = F.neg(mod[0])  # linear factor t - root

            def sigma(a, r=root):
                return F.add(a[0], F.mul(r, F.add(a[1], F.mul(r, a[2]))))

            factors.append(ResidueFactor(F, sigma, mod))
        else:
            K = ExtensionField(F, mod)
            t = (0, 1) + (0,) * (K.degree - 2)

            def sigma(a, K=K, t=t):
                out = K.from_base(a[0])
                out = K.add(out, K.mul(K.from_base(a[1]), t))
                return K.add(out, K.mul(K.from_base(a[2]), K.mul(t, t)))

            factors.append(ResidueFactor(K, sigma, mod))
    return factors


def etale_crt(E: Deg3Algebra, factors: list, residues: list):
    """The element of E with the given images in every residue factor."""
    F = E.field
    rows = []
    rhs = []
    for factor, res in zip(factors, residues):
        if factor.degree == 1:
            rows.append([factor.sigma(e) for e in E.basis()])
            rhs.append(res)
        else:
            images = [factor.sigma(e) for e in E.basis()]
            for c in range(factor.degree):
                rows.append([img[c] for img in images])
                rhs.append(res[c])
    sol = linalg.solve(F, rows, rhs)
    if sol is None:
        raise ArithmeticError("residue data is inconsistent")
    return tuple(sol)


def algebra_from_descriptor(field, desc: dict) -> Deg3Algebra:
    """Build a degree-3 algebra from its JSON descriptor."""
    if not isinstance(desc, dict) or "kind" not in desc:
        raise ConfigError(f"malformed algebra descriptor: {desc!r}")
    kind = desc["kind"]
    if kind == "split":
        return SplitEtale(field)
    if kind == "mat3":
        return Matrix3(field)
    if kind == "cubic":
        f = desc.get("f")
        if not isinstance(f, (list, tuple)) or len(f) != 3:
            raise ConfigError("cubic descriptor needs f = [c0, c1, c2]")
        c0, c1, c2 = (field.parse(str(c)) for c in f)
        return CubicQuotient(field, c0, c1, c2)
    raise ConfigError(f"unknown algebra kind: {kind!r}")
