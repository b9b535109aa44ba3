from fractions import Fraction

import pytest

from albertkit import linalg
from albertkit.axioms import all_passed, cubic_axiom_checks, quadratic_axiom_checks, run_axiom_suite
from albertkit.errors import ConfigError, ModelMismatch, NotInvertible
from albertkit.jordan import quadratic_view
from albertkit.rng import spawn


def frac3(a, b, c):
    return (Fraction(a), Fraction(b), Fraction(c))


def test_cross_with_unit(split_q_model):
    J = split_q_model
    rng = spawn("cross-unit")
    for _ in range(20):
        x = J.rand(rng)
        expected = J.sub(J.scale(J.trace(x), J.unit), x)
        assert J.cross(J.unit, x) == expected


def test_cross_diagonal_doubles_sharp(split_q_model):
    J = split_q_model
    rng = spawn("cross-diag")
    for _ in range(20):
        x = J.rand(rng)
        assert J.cross(x, x) == J.scale(Fraction(2), J.sharp(x))


def test_cross_first_slot_against_middle_slot(split_q_model):
    # (1,0,0) x (0,b,0) = (0,-b,0)
    J = split_q_model
    E = J.algebra
    b = frac3(2, 3, 5)
    x = J.embed_first_slot(E.unit)
    y = J.assemble(E.zero, b, E.zero)
    assert J.cross(x, y) == J.assemble(E.zero, E.neg(b), E.zero)


def test_trace_of_unit_is_three(split_q_model, cubic_q_model):
    assert split_q_model.trace(split_q_model.unit) == Fraction(3)
    assert cubic_q_model.trace(cubic_q_model.unit) == Fraction(3)


def test_trace_gram_is_symmetric(split_q_model, albert_f7):
    for J in (split_q_model, albert_f7):
        assert J.trace_gram == linalg.transpose(J.trace_gram)


def test_trace_restricts_to_first_slot(split_q_model):
    J = split_q_model
    E = J.algebra
    rng = spawn("trace-slot")
    for _ in range(20):
        a = E.rand(rng)
        assert J.trace(J.embed_first_slot(a)) == E.trace(a)


def test_trace_forms_returns_both(split_q_model):
    J = split_q_model
    rng = spawn("tf")
    x, y = J.rand(rng), J.rand(rng)
    t, b = J.trace_forms(x, y)
    assert t == J.trace(x)
    assert b == J.trace_pair(x, y)


def test_u_operator_unit_cases(split_q_model):
    J = split_q_model
    rng = spawn("u-unit")
    c = Fraction(5, 3)
    for _ in range(10):
        y = J.rand(rng)
        assert J.u_op(J.unit, y) == y
        assert J.u_op(J.scale(c, J.unit), y) == J.scale(c * c, y)


def test_u_matrix_matches_u_op(split_q_model, albert_f7):
    for J in (split_q_model, albert_f7):
        rng = spawn("u-matrix", J.dim)
        for _ in range(5):
            x, y = J.rand(rng), J.rand(rng)
            M = J.u_matrix(x)
            assert tuple(linalg.mat_vec(J.field, M, list(y))) == J.u_op(x, y)


def test_triple_product_identities(split_q_model):
    J = split_q_model
    rng = spawn("triple")
    for _ in range(10):
        x, y = J.rand(rng), J.rand(rng)
        assert J.triple(x, y, x) == J.scale(Fraction(2), J.u_op(x, y))
        assert J.triple(J.unit, y, J.unit) == J.scale(Fraction(2), y)


def test_inverse_unit_and_diagonal(split_q_model):
    J = split_q_model
    assert J.inverse(J.unit) == J.unit
    x = J.embed_first_slot(frac3(2, 3, 5))
    assert J.inverse(x) == J.embed_first_slot(frac3("1/2", "1/3", "1/5"))


def test_inverse_u_relations(split_q_model, albert_f7):
    for J in (split_q_model, albert_f7):
        rng = spawn("inv-u", J.dim)
        for _ in range(5):
            x = J.rand_invertible(rng)
            xi = J.inverse(x)
            assert J.u_op(x, xi) == x
            u_x = J.u_matrix(x)
            u_xi = J.u_matrix(xi)
            ident = linalg.identity(J.field, J.dim)
            assert linalg.mat_mul(J.field, u_x, u_xi) == ident
            assert linalg.invert(J.field, u_x) == u_xi


def test_inverse_rejects_norm_zero(split_q_model):
    J = split_q_model
    x = J.embed_first_slot(frac3(1, 1, 0))
    with pytest.raises(NotInvertible):
        J.inverse(x)


def test_norm_nonzero_iff_u_matrix_invertible(split_q_model, albert_f7):
    # invertibility is decided via N(v) != 0; cross-check against U_v
    for J in (split_q_model, albert_f7):
        rng = spawn("inv-iff", J.dim)
        for _ in range(15):
            v = J.rand(rng)
            invertible = not J.field.is_zero(J.norm(v))
            assert linalg.is_invertible(J.field, J.u_matrix(v)) == invertible
        assert not linalg.is_invertible(J.field, J.u_matrix(J.zero_element()))
        singular = J.embed_first_slot(J.algebra.sub(J.algebra.unit, J.algebra.unit))
        assert not linalg.is_invertible(J.field, J.u_matrix(singular))


def test_min_poly_unit_is_inseparable(split_q_model):
    mp = split_q_model.min_poly(split_q_model.unit)
    assert (mp.c2, mp.c1, mp.c0) == (Fraction(3), Fraction(3), Fraction(1))
    assert mp.disc == Fraction(0) and not mp.etale


def test_min_poly_distinct_diagonal(split_q_model):
    J = split_q_model
    mp = J.min_poly(J.embed_first_slot(frac3(2, 3, 5)))
    assert (mp.c2, mp.c1, mp.c0) == (Fraction(10), Fraction(31), Fraction(30))
    assert mp.disc == Fraction(36) and mp.etale


def test_min_poly_annihilates(split_q_model, albert_f7):
    for J in (split_q_model, albert_f7):
        rng = spawn("cayley", J.dim)
        for _ in range(20):
            x = J.rand(rng)
            assert J.is_zero(J.min_poly_value(x))


def test_model_mismatch(split_q_model):
    with pytest.raises(ModelMismatch):
        split_q_model.norm((Fraction(1),))


def test_axiom_suite_passes_on_models(split_q_model, cubic_q_model, albert_f7):
    for J in (split_q_model, cubic_q_model, albert_f7):
        assert all_passed(run_axiom_suite(J, 25, 11))


def test_axiom_suite_rejects_zero_trials(split_q_model):
    with pytest.raises(ConfigError):
        quadratic_axiom_checks(quadratic_view(split_q_model), 0, 1)
    with pytest.raises(ConfigError):
        cubic_axiom_checks(split_q_model, 0, 1)


def test_corrupted_sharp_fails_suite(albert_f7):
    J = albert_f7
    bad = J.with_corrupted_sharp(spawn("corrupt", 0))
    checks = run_axiom_suite(bad, 200, 3)
    failed = [c for c in checks if not c.passed]
    assert failed
    assert all(c.witness is not None for c in failed)


def test_corruption_leaves_original_intact(albert_f7):
    J = albert_f7
    rng = spawn("corrupt-orig")
    x = J.rand(rng)
    before = J.sharp(x)
    J.with_corrupted_sharp(spawn("corrupt", 1))
    assert J.sharp(x) == before


def test_check_result_report_shape(split_q_model):
    checks = run_axiom_suite(split_q_model, 5, 1)
    for c in checks:
        d = c.to_dict()
        assert set(d) >= {"name", "anchor", "trials", "passed"}
        assert d["anchor"]
