"""Dense univariate polynomial helpers over an exact field.

Coefficient lists run low degree to high.  Only what the workbench needs:
ring arithmetic, gcd, modular powers, the cubic discriminant, and the
factorization of separable cubics over prime fields.
"""

from __future__ import annotations

from .errors import NotEtale
from .fields import PrimeField
from .rng import spawn


def trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def degree(cs) -> int:
    return len(trim(cs)) - 1


def add(F, a, b):
    n = max(len(a), len(b))
    a = list(a) + [F.zero] * (n - len(a))
    b = list(b) + [F.zero] * (n - len(b))
    return trim(F.add(x, y) for x, y in zip(a, b))


def sub(F, a, b):
    return add(F, a, [F.neg(x) for x in b])


def mul(F, a, b):
    a, b = trim(a), trim(b)
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(out)


def divmod_(F, a, b):
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [F.zero] * max(0, len(a) - len(b) + 1)
    r = list(a)
    inv_lead = F.inv(b[-1])
    while len(r) >= len(b) and trim(r):
        r = trim(r)
        if len(r) < len(b):
            break
        c = F.mul(r[-1], inv_lead)
        k = len(r) - len(b)
        q[k] = c
        for j, y in enumerate(b):
            r[k + j] = F.sub(r[k + j], F.mul(c, y))
    return trim(q), trim(r)


def monic(F, a):
    a = trim(a)
    if not a:
        return a
    inv = F.inv(a[-1])
    return [F.mul(c, inv) for c in a]


def gcd(F, a, b):
    a, b = trim(a), trim(b)
    while b:
        _, r = divmod_(F, a, b)
        a, b = b, r
    return monic(F, a)


def powmod(F, a, e: int, modulus):
    _, acc = divmod_(F, [F.one], modulus)
    acc = acc or [F.one]
    base = divmod_(F, a, modulus)[1]
    while e:
        if e & 1:
            acc = divmod_(F, mul(F, acc, base), modulus)[1]
        base = divmod_(F, mul(F, base, base), modulus)[1]
        e >>= 1
    return acc


def eval_at(F, cs, x):
    acc = F.zero
    for c in reversed(trim(cs)):
        acc = F.add(F.mul(acc, x), c)
    return acc


def cubic_disc(F, c0, c1, c2):
    """Discriminant of the monic cubic t^3 + c2 t^2 + c1 t + c0."""
    f = F.from_int
    return F.add(
        F.add(
            F.sub(
                F.mul(F.mul(f(18), F.mul(c2, c1)), c0),
                F.mul(f(4), F.mul(F.mul(c2, F.mul(c2, c2)), c0)),
            ),
            F.mul(F.mul(c2, c2), F.mul(c1, c1)),
        ),
        F.sub(
            F.neg(F.mul(f(4), F.mul(c1, F.mul(c1, c1)))),
            F.mul(f(27), F.mul(c0, c0)),
        ),
    )


def _quadratic_roots(F: PrimeField, c0, c1):
    """Roots in F_p of t^2 + c1 t + c0, assuming it splits."""
    disc = F.sub(F.mul(c1, c1), F.mul(F.from_int(4), c0))
    s = F.sqrt(disc)
    if s is None:
        raise ArithmeticError("quadratic does not split")
    half = F.inv(F.from_int(2))
    r1 = F.mul(F.sub(s, c1), half)
    r2 = F.mul(F.sub(F.neg(s), c1), half)
    return r1, r2


def factor_cubic(F: PrimeField, c0, c1, c2):
    """Factor a separable monic cubic over F_p.

    Returns the monic irreducible factors as low-coefficient tuples
    (leading 1 implicit), linear factors first, sorted for determinism.
    Possible shapes: three linears, linear + quadratic, or one cubic.
    """
    if F.is_zero(cubic_disc(F, c0, c1, c2)):
        raise NotEtale("cubic has repeated roots")
    f = [c0, c1, c2, F.one]
    t = [F.zero, F.one]
    frob = powmod(F, t, F.p, f)
    g = gcd(F, sub(F, frob, t), f)
    d = degree(g)
    if d == 0:
        return [(c0, c1, c2)]
    if d == 1:
        root = F.neg(g[0])
        quad, rem = divmod_(F, f, [F.neg(root), F.one])
        assert not rem
        return [(F.neg(root),), (quad[0], quad[1])]
    # fully split: find one root by random splitting, then solve the quadratic
    rng = spawn("factor-cubic", F.p, c0, c1, c2)
    root = None
    for _ in range(200):
        a = F.rand(rng)
        w = powmod(F, [a, F.one], (F.p - 1) // 2, f)
        h = gcd(F, sub(F, w, [F.one]), f)
        dh = degree(h)
        if dh == 1:
            root = F.neg(h[0])
            break
        if dh == 2:
            quot, _ = divmod_(F, f, h)
            root = F.neg(quot[0])
            break
    if root is None:
        raise ArithmeticError("random splitting failed")
    quad, rem = divmod_(F, f, [F.neg(root), F.one])
    assert not rem
    r1, r2 = _quadratic_roots(F, quad[0], quad[1])
    roots = sorted([root, r1, r2])
    return [(F.neg(r),) for r in roots]


def find_irreducible_cubic(F: PrimeField):
    """Deterministic smallest irreducible monic cubic t^3 + c1 t + c0."""
    t = [F.zero, F.one]
    for c1 in range(F.p):
        for c0 in range(1, F.p):
            f = [c0, c1, F.zero, F.one]
            if F.is_zero(cubic_disc(F, c0, c1, F.zero)):
                continue
            frob = powmod(F, t, F.p, f)
            if degree(gcd(F, sub(F, frob, t), f)) == 0:
                return (c0, c1, F.zero)
    raise ArithmeticError(f"no irreducible cubic found over F_{F.p}")
