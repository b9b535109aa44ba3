"""Exact ground-field arithmetic.

Three coefficient domains, all exact (no floating point anywhere):

* ``RationalField`` -- arbitrary-precision rationals (``fractions.Fraction``);
* ``PrimeField(p)`` -- residues mod an odd prime p >= 5, stored as ints in [0, p);
* ``ExtensionField(p, modulus)`` -- F_{p^d} presented as F_p[t]/(modulus),
  elements stored as coefficient tuples.  Extension fields never appear as a
  configurable ground field; they arise internally when an etale cubic algebra
  is decomposed into residue factors.

Characteristics 2 and 3 are rejected: every construction downstream divides
by 2 (polarizations) and relies on cubic linearizations staying integral.
"""

from __future__ import annotations

import enum
import math
import re
from fractions import Fraction

from .errors import (
    ConfigError,
    DivisionByZero,
    FactorizationBoundExceeded,
    ZeroInput,
)
from .rng import spawn

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")
_INT_RE = re.compile(r"^[+-]?\d+$")

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 64-bit inputs."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class SquareTag(enum.Enum):
    SQUARE = "square"
    NONSQUARE = "nonsquare"


class Field:
    """Shared conveniences; concrete fields implement the arithmetic."""

    char: int
    finite: bool

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def from_int(self, n: int):
        raise NotImplementedError

    def dot(self, xs, ys):
        acc = self.zero
        for a, b in zip(xs, ys):
            acc = self.add(acc, self.mul(a, b))
        return acc

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        acc, base = self.one, a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def rand_nonzero(self, rng):
        for _ in range(10000):
            a = self.rand(rng)
            if not self.is_zero(a):
                return a
        raise RuntimeError("could not sample a nonzero element")


class RationalField(Field):
    char = 0
    finite = False

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero in Q")
        return 1 / a

    def from_int(self, n):
        return Fraction(n)

    def dot(self, xs, ys):
        return sum((a * b for a, b in zip(xs, ys)), Fraction(0))

    def rand(self, rng):
        return Fraction(rng.randint(-12, 12), rng.randint(1, 8))

    def parse(self, text: str):
        text = text.strip()
        if not _RATIONAL_RE.match(text):
            raise ConfigError(f"not an exact rational: {text!r}")
        return Fraction(text)

    def render(self, a) -> str:
        return str(a)

    def square_class(self, a, bound: int = 10**6):
        """Square-free part of a nonzero rational (sign included)."""
        if a == 0:
            raise ZeroInput("square class of 0 is undefined")
        return Fraction(squarefree_part(a.numerator * a.denominator, bound))

    def is_square(self, a, bound: int = 10**6) -> bool:
        if a == 0:
            return True
        return a > 0 and self.square_class(a, bound) == 1

    def describe(self) -> str:
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "RationalField()"


def squarefree_part(n: int, bound: int = 10**6) -> int:
    """Square-free part of a nonzero integer by trial division.

    Raises FactorizationBoundExceeded when a cofactor with prime factors
    above ``bound`` cannot be classified, rather than guessing.
    """
    if n == 0:
        raise ZeroInput("square-free part of 0 is undefined")
    sign = -1 if n < 0 else 1
    n = abs(n)
    res = 1
    d = 2
    while d <= bound and d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if e % 2:
                res *= d
        d += 1 if d == 2 else 2
    if n > 1:
        r = math.isqrt(n)
        if r * r == n:
            pass  # all remaining exponents even
        elif n <= bound * bound:
            res *= n  # no factor <= bound, so n is prime
        else:
            raise FactorizationBoundExceeded(
                f"cofactor {n} exceeds the factorization bound {bound}"
            )
    return sign * res


class PrimeField(Field):
    finite = True

    def __init__(self, p: int):
        if not is_prime(p) or p < 5:
            raise ConfigError(f"modulus must be a prime >= 5, got {p}")
        self.p = p
        self.char = p
        self.order = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"division by zero in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, e: int):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def from_int(self, n):
        return n % self.p

    def dot(self, xs, ys):
        acc = 0
        for a, b in zip(xs, ys):
            acc += a * b
        return acc % self.p

    def rand(self, rng):
        return rng.randrange(self.p)

    def parse(self, text: str):
        text = text.strip()
        if not _INT_RE.match(text):
            raise ConfigError(f"not an integer residue: {text!r}")
        return int(text) % self.p

    def render(self, a) -> str:
        return str(a)

    def is_square(self, a) -> bool:
        if a == 0:
            return True
        return pow(a, (self.p - 1) // 2, self.p) == 1

    def square_class(self, a) -> SquareTag:
        if a == 0:
            raise ZeroInput("square class of 0 is undefined")
        return SquareTag.SQUARE if self.is_square(a) else SquareTag.NONSQUARE

    def sqrt(self, a):
        return _tonelli_shanks(self, a)

    def describe(self) -> str:
        return f"Fp:{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class ExtensionField(Field):
    """F_{p^d} = F_p[t]/(m) for a monic irreducible m of degree d.

    ``modulus`` holds the low-order coefficients (c0, ..., c_{d-1}) of
    m = t^d + c_{d-1} t^{d-1} + ... + c0.  Elements are tuples of length d.
    """

    finite = True

    def __init__(self, base: PrimeField, modulus: tuple):
        self.base = base
        self.p = base.p
        self.char = base.p
        self.modulus = tuple(c % self.p for c in modulus)
        self.degree = len(self.modulus)
        if self.degree < 1:
            raise ConfigError("extension modulus must have degree >= 1")
        self.order = self.p**self.degree
        self.zero = (0,) * self.degree
        self.one = (1,) + (0,) * (self.degree - 1)

    def from_base(self, a):
        return (a % self.p,) + (0,) * (self.degree - 1)

    def from_int(self, n):
        return self.from_base(n % self.p)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        p, d = self.p, self.degree
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        # reduce t^k for k >= d using t^d = -modulus
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k] % p
            if c:
                for j, m in enumerate(self.modulus):
                    prod[k - d + j] -= c * m
            prod[k] = 0
        return tuple(v % p for v in prod[:d])

    def inv(self, a):
        if all(x == 0 for x in a):
            raise DivisionByZero(f"division by zero in F_{self.p}^{self.degree}")
        return self.pow(a, self.order - 2)

    def rand(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.degree))

    def render(self, a) -> str:
        return "(" + ",".join(str(x) for x in a) + ")"

    def parse(self, text: str):
        parts = text.strip().strip("()").split(",")
        if len(parts) != self.degree:
            raise ConfigError(f"expected {self.degree} coordinates: {text!r}")
        return tuple(int(x) % self.p for x in parts)

    def is_square(self, a) -> bool:
        if self.is_zero(a):
            return True
        return self.pow(a, (self.order - 1) // 2) == self.one

    def square_class(self, a) -> SquareTag:
        if self.is_zero(a):
            raise ZeroInput("square class of 0 is undefined")
        return SquareTag.SQUARE if self.is_square(a) else SquareTag.NONSQUARE

    def sqrt(self, a):
        return _tonelli_shanks(self, a)

    def describe(self) -> str:
        return f"Fp:{self.p}^{self.degree}"

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.p == self.p
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("Fpd", self.p, self.modulus))

    def __repr__(self):
        return f"ExtensionField({self.p}, {self.modulus})"


def _nonresidue(field):
    """A deterministic quadratic non-residue of a finite field."""
    rng = spawn("nonresidue", field.describe(), getattr(field, "modulus", ()))
    for _ in range(10000):
        a = field.rand(rng)
        if not field.is_zero(a) and not field.is_square(a):
            return a
    raise RuntimeError("no quadratic non-residue found")


def _tonelli_shanks(field, a):
    """Square root in a finite field of odd order; None for non-squares."""
    if field.is_zero(a):
        return field.zero
    if not field.is_square(a):
        return None
    q = field.order
    m, s = q - 1, 0
    while m % 2 == 0:
        m //= 2
        s += 1
    if s == 1:  # q = 3 mod 4
        r = field.pow(a, (q + 1) // 4)
    else:
        c = field.pow(_nonresidue(field), m)
        r = field.pow(a, (m + 1) // 2)
        t = field.pow(a, m)
        while t != field.one:
            t2, i = t, 0
            while t2 != field.one:
                t2 = field.mul(t2, t2)
                i += 1
            b = field.pow(c, 1 << (s - i - 1))
            r = field.mul(r, b)
            c = field.mul(b, b)
            t = field.mul(t, c)
            s = i
    assert field.mul(r, r) == a
    return r


def field_from_descriptor(text: str) -> Field:
    """Build the ground field named by a config string: "Q" or "Fp:<p>"."""
    if not isinstance(text, str):
        raise ConfigError(f"field descriptor must be a string, got {text!r}")
    text = text.strip()
    if text == "Q":
        return RationalField()
    if text.startswith("Fp:"):
        body = text[3:]
        if not body.isdigit():
            raise ConfigError(f"malformed prime field descriptor: {text!r}")
        return PrimeField(int(body))
    raise ConfigError(f"unknown field descriptor: {text!r}")
