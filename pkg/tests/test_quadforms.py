from fractions import Fraction

import pytest

from albertkit import linalg
from albertkit.deg3 import residue_factors
from albertkit.errors import ConfigError, NotSplitModel
from albertkit.fields import PrimeField, RationalField, SquareTag
from albertkit.quadforms import (
    EValuedForm,
    QuadraticForm,
    block_diagonal,
    diagonalize,
    hyperbolic_gram,
    isotropic_vector,
    lemma_discr_check,
    polarize,
    witt_invariants,
)
from albertkit.rng import spawn
from albertkit.springer import (
    diagonal_mat3_embedding,
    first_slot_embedding,
    from_e_coords,
    orthogonal_complement,
    springer_form,
)


def diag_form(F, entries):
    n = len(entries)
    return QuadraticForm(
        F, [[entries[i] if i == j else F.zero for j in range(n)] for i in range(n)]
    )


def test_gram_must_be_symmetric():
    F = PrimeField(7)
    with pytest.raises(ConfigError):
        QuadraticForm(F, [[1, 2], [3, 4]])


def test_diagonalize_hyperbolic_plane():
    Q = RationalField()
    form = QuadraticForm(Q, hyperbolic_gram(Q))
    diag, P = diagonalize(form)
    assert diag == [Fraction(2), Fraction(-1, 2)]
    # congruence replay: P^T G P equals the diagonal matrix exactly
    D = form.congruent(P)
    assert D.gram == [[Fraction(2), Fraction(0)], [Fraction(0), Fraction(-1, 2)]]


def test_diagonalize_identity_and_zero():
    Q = RationalField()
    ident = QuadraticForm(Q, linalg.identity(Q, 3))
    diag, P = diagonalize(ident)
    assert diag == [Fraction(1)] * 3 and P == linalg.identity(Q, 3)
    zero = QuadraticForm(Q, [[Fraction(0)] * 2 for _ in range(2)])
    diag, _ = diagonalize(zero)
    assert diag == [Fraction(0), Fraction(0)]


def test_diagonalize_random_congruence(f101):
    rng = spawn("diag")
    for n in (2, 4, 6):
        for _ in range(5):
            M = [[f101.rand(rng) for _ in range(n)] for _ in range(n)]
            G = [
                [f101.add(M[i][j], M[j][i]) for j in range(n)] for i in range(n)
            ]
            form = QuadraticForm(f101, G)
            diag, P = diagonalize(form)
            D = form.congruent(P)
            assert all(
                f101.is_zero(D.gram[i][j])
                for i in range(n)
                for j in range(n)
                if i != j
            )
            assert [D.gram[i][i] for i in range(n)] == diag


def test_witt_invariants_hyperbolic_plane_f7(f7):
    inv = witt_invariants(diag_form(f7, [1, f7.neg(1)]))
    assert inv.rank == 2
    assert inv.disc == f7.neg(1)
    assert inv.disc_class == SquareTag.NONSQUARE  # -1 = 6 is not a square mod 7
    assert inv.witt_index == 1


def test_witt_invariants_definite_f7(f7):
    # <1,1> over F_7 is anisotropic because -1 is not a square
    inv = witt_invariants(diag_form(f7, [1, 1]))
    assert (inv.rank, inv.disc_class, inv.witt_index) == (2, SquareTag.SQUARE, 0)


def test_witt_invariants_four_hyperbolic_planes(f7):
    form = QuadraticForm(f7, block_diagonal(f7, [hyperbolic_gram(f7)] * 4))
    inv = witt_invariants(form)
    assert (inv.rank, inv.disc_class, inv.witt_index) == (8, SquareTag.SQUARE, 4)


def test_witt_invariants_sum_with_hyperbolic(f101):
    rng = spawn("witt-sum")
    for _ in range(5):
        entries = [f101.rand_nonzero(rng) for _ in range(3)]
        base = witt_invariants(diag_form(f101, entries))
        gram = block_diagonal(
            f101, [diag_form(f101, entries).gram, hyperbolic_gram(f101)]
        )
        bigger = witt_invariants(QuadraticForm(f101, gram))
        assert bigger.witt_index == base.witt_index + 1
        assert bigger.rank == base.rank + 2


def test_witt_invariants_are_congruence_invariant(f101):
    rng = spawn("witt-inv")
    entries = [f101.rand_nonzero(rng) for _ in range(4)]
    form = diag_form(f101, entries)
    base = witt_invariants(form)
    for _ in range(20):
        n = form.dim
        P = [[f101.rand(rng) for _ in range(n)] for _ in range(n)]
        while not linalg.is_invertible(f101, P):
            P = [[f101.rand(rng) for _ in range(n)] for _ in range(n)]
        other = witt_invariants(form.congruent(P))
        assert base.same_class(other)


def test_witt_invariants_refuse_rationals():
    Q = RationalField()
    with pytest.raises(ConfigError):
        witt_invariants(diag_form(Q, [Fraction(1)]))


def test_isotropic_vector_hyperbolic(f7):
    form = QuadraticForm(f7, hyperbolic_gram(f7))
    v = isotropic_vector(form, seed=3)
    assert v is not None and f7.is_zero(form.evaluate(v))


def test_isotropic_vector_anisotropic_cases(f7, f101):
    assert isotropic_vector(diag_form(f7, [1, 1]), seed=0) is None
    assert isotropic_vector(diag_form(f7, [5]), seed=0) is None
    # -1 is a square mod 101, so <1,1> is isotropic there
    v = isotropic_vector(diag_form(f101, [1, 1]), seed=0)
    assert v is not None and f101.is_zero(diag_form(f101, [1, 1]).evaluate(v))


def test_isotropic_vector_rank_three_and_up(f7, f101):
    rng = spawn("iso3")
    for F in (f7, f101):
        for n in (3, 5, 8):
            for k in range(5):
                entries = [F.rand_nonzero(rng) for _ in range(n)]
                form = diag_form(F, entries)
                v = isotropic_vector(form, seed=k)
                assert v is not None
                assert F.is_zero(form.evaluate(v))
                assert any(not F.is_zero(c) for c in v)


def test_isotropic_vector_varies_with_seed(f101):
    form = diag_form(f101, [1, 1, 1, 1])
    seen = {isotropic_vector(form, seed=s) for s in range(6)}
    assert len(seen) > 1


def test_polarize_rank_eight(albert_f7):
    emb = diagonal_mat3_embedding(albert_f7)
    data = orthogonal_complement(albert_f7, emb)
    gens, form = polarize(emb, data)
    assert form.dim == 8 and len(gens) == 8


def test_polarized_gram_reproduces_springer_form(albert_f7):
    emb = diagonal_mat3_embedding(albert_f7)
    data = orthogonal_complement(albert_f7, emb)
    gens, form = polarize(emb, data)
    E = emb.E
    rng = spawn("gram-eval")
    for _ in range(10):
        coords = [E.rand(rng) for _ in range(8)]
        x = from_e_coords(emb, data, gens, coords)
        q, _ = springer_form(emb, data, x)
        assert form.evaluate(coords) == q


def test_e_valued_form_factor_maps_commute(albert_f7):
    emb = diagonal_mat3_embedding(albert_f7)
    data = orthogonal_complement(albert_f7, emb)
    gens, form = polarize(emb, data)
    E = emb.E
    rng = spawn("factor-eval")
    for factor in residue_factors(E):
        mapped = form.map_factor(factor)
        for _ in range(5):
            coords = [E.rand(rng) for _ in range(8)]
            img = [factor.sigma(c) for c in coords]
            assert factor.sigma(form.evaluate(coords)) == mapped.evaluate(img)


def test_nine_dim_springer_form_is_hyperbolic_over_e(split_q_model):
    # on the 9-dim model the polarized form is the rank-2 hyperbolic E-form
    J = split_q_model
    emb = first_slot_embedding(J)
    data = orthogonal_complement(J, emb)
    gens, form = polarize(emb, data)
    assert form.dim == 2
    E = emb.E
    rng = spawn("9dim-h")
    for _ in range(10):
        coords = [E.rand(rng) for _ in range(2)]
        x = from_e_coords(emb, data, gens, coords)
        q, _ = springer_form(emb, data, x)
        assert form.evaluate(coords) == q


@pytest.mark.parametrize("p", [7, 101])
def test_lemma_discr_check_diagonal(p):
    from albertkit.deg3 import Matrix3
    from albertkit.tits import tits_first

    F = PrimeField(p)
    J = tits_first(Matrix3(F), 1)
    emb = diagonal_mat3_embedding(J)
    data = orthogonal_complement(J, emb)
    result = lemma_discr_check(J, emb, data)
    assert result["passed"]
    assert result["e_rank"] == 8
    for fac in result["factors"]:
        assert fac["computed"] == {"rank": 8, "disc_class": "square", "witt_index": 4}
        assert fac["computed"] == fac["expected"]


def test_lemma_discr_check_requires_split_prime_model(split_q_model):
    emb = first_slot_embedding(split_q_model)
    data = orthogonal_complement(split_q_model, emb)
    with pytest.raises(NotSplitModel):
        lemma_discr_check(split_q_model, emb, data)
