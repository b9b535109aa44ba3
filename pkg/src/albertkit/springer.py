"""Springer-form data for a cubic etale subalgebra E of a Jordan model J.

The trace form of J restricts nondegenerately to E, so J = E + E_perp.
E_perp becomes an E-module through (a, x) -> -iota(a) x x (the cross
product), and the E-component of x# defines the E-valued quadratic
Springer form q_E, with remainder r_E in E_perp.

The module also produces isotropic invertible elements (the search
ingredient for the subalgebra-transitivity argument) and realizes the
Tits-model embedding attached to such an element.
"""

from __future__ import annotations

from . import linalg
from .deg3 import (
    CubicQuotient,
    Matrix3,
    SplitEtale,
    companion_embedding,
    etale_crt,
    residue_factors,
)
from .errors import (
    BasisConstructionFailed,
    ConfigError,
    DegenerateTrace,
    NotCommutative,
    NotInComplement,
    NotInvertible,
    NotIsotropic,
    SearchExhausted,
)
from .fields import PrimeField
from .jordan import CubicJordanModel
from .rng import derive_seed, spawn
from .tits import TitsModel, tits_first


class EtaleEmbedding:
    """A linear injection of a commutative degree-3 algebra into a model,
    respecting unit, norm and sharp (sampled downstream)."""

    def __init__(self, model: CubicJordanModel, E, iota_cols, label: str):
        if not E.commutative:
            raise NotCommutative("embedded subalgebra must be commutative")
        self.model = model
        self.E = E
        self.iota_cols = [tuple(c) for c in iota_cols]
        self.label = label
        if self.apply(E.unit) != model.unit:
            raise ConfigError("embedding does not send the unit to the unit")
        self.gram = [
            [model.trace_pair(bi, bj) for bj in self.iota_cols]
            for bi in self.iota_cols
        ]
        try:
            self.gram_inv = linalg.invert(model.field, self.gram)
        except Exception as exc:
            raise DegenerateTrace(
                "trace form is degenerate on the subalgebra"
            ) from exc

    def apply(self, a):
        model, F = self.model, self.model.field
        out = model.zero_element()
        for c, col in zip(a, self.iota_cols):
            out = model.add(out, model.scale(c, col))
        return out

    def coords_of(self, x):
        """E-coordinates of the E-component of x (trace-orthogonal split)."""
        t = [self.model.trace_pair(col, x) for col in self.iota_cols]
        return tuple(linalg.mat_vec(self.model.field, self.gram_inv, t))

    def project_e(self, x):
        return self.apply(self.coords_of(x))

    def project_perp(self, x):
        return self.model.sub(x, self.project_e(x))

    def in_complement(self, x) -> bool:
        F = self.model.field
        return all(F.is_zero(c) for c in self.coords_of(x))

    def __repr__(self):
        return f"<EtaleEmbedding {self.label} into dim {self.model.dim}>"


class SpringerData:
    """Basis of E_perp plus the projection pair for J = E + E_perp."""

    def __init__(self, emb: EtaleEmbedding):
        model = emb.model
        F = model.field
        rows = [linalg.mat_vec(F, model.trace_gram, list(col)) for col in emb.iota_cols]
        self.emb = emb
        self.basis_perp = [tuple(v) for v in linalg.kernel(F, rows)]
        if len(self.basis_perp) != model.dim - 3:
            raise DegenerateTrace(
                f"complement has rank {len(self.basis_perp)}, expected {model.dim - 3}"
            )

    @property
    def rank(self) -> int:
        return len(self.basis_perp)


def orthogonal_complement(model: CubicJordanModel, emb: EtaleEmbedding) -> SpringerData:
    if emb.model is not model:
        raise ConfigError("embedding belongs to a different model")
    return SpringerData(emb)


def e_action(emb: EtaleEmbedding, data: SpringerData, a, x):
    """The E-module action on E_perp: (a, x) -> -iota(a) x x."""
    if not emb.in_complement(x):
        raise NotInComplement("element is not trace-orthogonal to E")
    model = emb.model
    return model.neg(model.cross(emb.apply(a), x))


def springer_form(emb: EtaleEmbedding, data: SpringerData, x):
    """Split x# into its E-component (the form value) and remainder.

    Returns (q, r) with q in E and r in E_perp; q is E-quadratic.
    """
    if not emb.in_complement(x):
        raise NotInComplement("element is not trace-orthogonal to E")
    model = emb.model
    s = model.sharp(x)
    q = emb.coords_of(s)
    r = model.sub(s, emb.apply(q))
    return q, r


def springer_bilinear(emb, data, x, y):
    """E-valued polarization q(x+y) - q(x) - q(y)."""
    E = emb.E
    qxy, _ = springer_form(emb, data, emb.model.add(x, y))
    qx, _ = springer_form(emb, data, x)
    qy, _ = springer_form(emb, data, y)
    return E.sub(E.sub(qxy, qx), qy)


def e_module_basis(emb: EtaleEmbedding, data: SpringerData, seed=0):
    """Free E-basis of E_perp: generators whose E-orbits span everything.

    Greedy, keeping a candidate only when its three action images enlarge
    the span by a full rank-3 block.  Kernel basis vectors often have
    degenerate orbits (they sit inside a single residue component), so the
    candidate stream falls back to seeded random combinations.
    """
    model, E, F = emb.model, emb.E, emb.model.field
    target = data.rank

    def candidates():
        yield from data.basis_perp
        rng = spawn(seed, "e-basis", emb.label)
        for _ in range(200):
            coeffs = [F.rand(rng) for _ in data.basis_perp]
            out = model.zero_element()
            for c, w in zip(coeffs, data.basis_perp):
                out = model.add(out, model.scale(c, w))
            yield out

    gens = []
    rows = []
    for w in candidates():
        cand = [list(e_action(emb, data, a, w)) for a in E.basis()]
        if linalg.rank(F, rows + cand) == len(rows) + 3:
            gens.append(w)
            rows.extend(cand)
        if len(rows) == target:
            break
    if len(rows) != target:
        raise BasisConstructionFailed(
            "complement is not exhibited as a free module over E"
        )
    return gens


def from_e_coords(emb: EtaleEmbedding, data: SpringerData, gens, coords):
    """The element of E_perp with the given E-coordinates along gens."""
    model = emb.model
    out = model.zero_element()
    for c, w in zip(coords, gens):
        out = model.add(out, e_action(emb, data, c, w))
    return out


def e_valued_gram(emb: EtaleEmbedding, data: SpringerData, gens):
    """Gram of q_E over E along gens, entries b(w_i, w_j) / 2 in E."""
    E = emb.E
    half = E.field.inv(E.field.from_int(2))
    n = len(gens)
    gram = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            b = springer_bilinear(emb, data, gens[i], gens[j])
            entry = E.scale(half, b)
            gram[i][j] = entry
            gram[j][i] = entry
    return gram


def isotropic_invertible(
    model: CubicJordanModel,
    emb: EtaleEmbedding,
    data: SpringerData,
    strategy: str = "slot",
    seed=0,
    slot_element=None,
    max_trials: int = 10000,
):
    """An invertible v in E_perp with q_E(v) = 0, verified before returning.

    "slot": in a Tits model take v = (0, b, 0) for invertible b, which is
    always isotropic.  "search": over a prime field, solve q_E = 0 in every
    residue factor of E, lift by CRT, and retry until the norm is nonzero.
    """
    if strategy == "slot":
        if not isinstance(model, TitsModel):
            raise ConfigError("slot strategy needs a Tits model")
        A = model.algebra
        b = slot_element if slot_element is not None else A.rand_invertible(spawn(seed, "slot"))
        if model.field.is_zero(A.norm(b)):
            raise NotInvertible("slot element must be invertible")
        v = model.assemble(A.zero, b, A.zero)
    elif strategy == "search":
        if not isinstance(model.field, PrimeField):
            raise ConfigError("randomized search needs a prime ground field")
        v = _search_isotropic(model, emb, data, seed, max_trials)
    else:
        raise ConfigError(f"unknown strategy {strategy!r}")
    q, _ = springer_form(emb, data, v)
    if not emb.E.is_zero(q):
        raise NotIsotropic("candidate is not isotropic")
    if model.field.is_zero(model.norm(v)):
        raise NotInvertible("candidate is not invertible")
    return v


def _search_isotropic(model, emb, data, seed, max_trials):
    E = emb.E
    gens = e_module_basis(emb, data)
    gram = e_valued_gram(emb, data, gens)
    factors = residue_factors(E)
    for t in range(max_trials):
        coords = _random_isotropic_coords(E, factors, gram, seed, t)
        v = from_e_coords(emb, data, gens, coords)
        if model.is_zero(v):
            continue
        q, _ = springer_form(emb, data, v)
        if not E.is_zero(q):
            continue
        if not model.field.is_zero(model.norm(v)):
            return v
    raise SearchExhausted(f"no isotropic invertible element in {max_trials} trials")


def _random_isotropic_coords(E, factors, gram, seed, trial):
    # local import: quadforms imports this module at load time
    from .quadforms import QuadraticForm, isotropic_vector

    n = len(gram)
    per_factor = []
    for fi, factor in enumerate(factors):
        k = factor.field
        fgram = [[factor.sigma(gram[i][j]) for j in range(n)] for i in range(n)]
        u = isotropic_vector(
            QuadraticForm(k, fgram), derive_seed(seed, "factor", trial, fi)
        )
        if u is None:
            raise NotIsotropic("residue factor form is anisotropic")
        per_factor.append(u)
    coords = []
    for j in range(n):
        coords.append(etale_crt(E, factors, [u[j] for u in per_factor]))
    return coords


class SpringerEmbedding:
    """The Tits-model copy of E + E + E inside J attached to an isotropic
    invertible v: (a0, a1, a2) -> a0 - a1 x v - N(v)^-1 a2 x v#."""

    def __init__(self, model, emb, lam_prime, matrix):
        self.model = model
        self.emb = emb
        self.lam_prime = lam_prime
        self.matrix = matrix  # model.dim x 9, columns are basis images
        self.target = tits_first(emb.E, lam_prime)

    def apply(self, x):
        return tuple(linalg.mat_vec(self.model.field, self.matrix, list(x)))

    def rank(self) -> int:
        return linalg.rank(self.model.field, self.matrix)

    def preimage(self, y):
        sol = linalg.solve(self.model.field, self.matrix, list(y))
        return None if sol is None else tuple(sol)


def springer_embedding(
    model: CubicJordanModel, emb: EtaleEmbedding, data: SpringerData, v
) -> SpringerEmbedding:
    F = model.field
    q, _ = springer_form(emb, data, v)
    if not emb.E.is_zero(q):
        raise NotIsotropic("v must satisfy q_E(v) = 0")
    nv = model.norm(v)
    if F.is_zero(nv):
        raise NotInvertible("v must be invertible")
    E = emb.E
    lam_prime = model.norm(model.neg(model.cross(emb.apply(E.unit), v)))
    nv_inv = F.inv(nv)
    v_sharp = model.sharp(v)
    cols = []
    for e in E.basis():
        cols.append(list(emb.apply(e)))
    for e in E.basis():
        cols.append(list(model.neg(model.cross(emb.apply(e), v))))
    for e in E.basis():
        w = model.cross(emb.apply(e), v_sharp)
        cols.append(list(model.scale(F.neg(nv_inv), w)))
    matrix = [[cols[j][i] for j in range(9)] for i in range(model.dim)]
    return SpringerEmbedding(model, emb, lam_prime, matrix)


def first_slot_embedding(model: TitsModel) -> EtaleEmbedding:
    if not isinstance(model, TitsModel):
        raise ConfigError("first-slot embedding needs a Tits model")
    E = model.algebra
    if not E.commutative:
        raise NotCommutative("first slot is not a commutative subalgebra")
    cols = [model.embed_first_slot(e) for e in E.basis()]
    return EtaleEmbedding(model, E, cols, "first-slot")


def diagonal_mat3_embedding(model: TitsModel) -> EtaleEmbedding:
    if not isinstance(model, TitsModel) or not isinstance(model.algebra, Matrix3):
        raise ConfigError("diagonal embedding needs a Tits model over 3x3 matrices")
    M = model.algebra
    E = SplitEtale(model.field)
    cols = [
        model.embed_first_slot(M.diagonal(*e)) for e in E.basis()
    ]
    return EtaleEmbedding(model, E, cols, "diagonal-mat3")


def companion_mat3_embedding(model: TitsModel, E: CubicQuotient) -> EtaleEmbedding:
    if not isinstance(model, TitsModel) or not isinstance(model.algebra, Matrix3):
        raise ConfigError("companion embedding needs a Tits model over 3x3 matrices")
    embed = companion_embedding(E, model.algebra)
    cols = [model.embed_first_slot(embed(e)) for e in E.basis()]
    return EtaleEmbedding(model, E, cols, "companion")


def embedding_from_descriptor(model: CubicJordanModel, desc: dict) -> EtaleEmbedding:
    if not isinstance(desc, dict) or "subalgebra" not in desc:
        raise ConfigError(f"malformed subalgebra descriptor: {desc!r}")
    kind = desc["subalgebra"]
    if kind == "first-slot":
        return first_slot_embedding(model)
    if kind == "diagonal-mat3":
        return diagonal_mat3_embedding(model)
    if kind == "companion":
        f = desc.get("f")
        if not isinstance(f, (list, tuple)) or len(f) != 3:
            raise ConfigError("companion descriptor needs f = [c0, c1, c2]")
        F = model.field
        E = CubicQuotient(F, *(F.parse(str(c)) for c in f))
        return companion_mat3_embedding(model, E)
    raise ConfigError(f"unknown subalgebra kind: {kind!r}")
