from fractions import Fraction as F

import pytest

from kahlergrad.envalg import PBWElement, casimir_element, e_power
from kahlergrad.gtrep import (
    GTPattern,
    build_rep,
    casimir_matrix,
    e_power_matrix,
    evaluate,
    gt_patterns,
    invariant_gram,
)
from kahlergrad.linalg import Matrix
from kahlergrad.weights import (
    casimir_eigenvalue,
    casimir_quadratic_closed_form,
    dominant_weights,
    transpose_weight,
    weyl_dimension,
)


def test_patterns_and_validation():
    pats = gt_patterns((1, 0))
    assert len(pats) == 2
    assert pats[0].weight() == (1, 0)  # highest-weight pattern first
    assert pats[1].weight() == (0, 1)
    with pytest.raises(ValueError):
        GTPattern(((2,), (1, 0)))  # 2 not between 1 and 0


def test_natural_representation():
    rep = build_rep((1, 0))
    assert rep.dim == 2
    assert rep.gen[(1, 1)] == Matrix.diagonal([1, 0])
    assert rep.gen[(2, 2)] == Matrix.diagonal([0, 1])
    assert rep.gen[(1, 2)] == Matrix([[0, 1], [0, 0]])
    assert rep.gen[(2, 1)] == Matrix([[0, 0], [1, 0]])
    assert rep.gram == Matrix.identity(2)


def test_determinant_power():
    rep = build_rep((3, 3, 3))
    assert rep.dim == 1
    for k in range(1, 4):
        for l in range(1, 4):
            expected = Matrix([[3]]) if k == l else Matrix([[0]])
            assert rep.gen[(k, l)] == expected


def test_casimir_on_small_modules():
    rep = build_rep((1, 1, 0))
    # oracle: closed form 1*(1+3-2+1) + 1*(1+3-4+1) = 3 + 1 = 4
    assert casimir_quadratic_closed_form((1, 1, 0)) == 4
    c2 = casimir_matrix(rep, 2)
    assert c2 == Matrix.identity(3).scale(4)


def test_invariant_gram_solver():
    rep = build_rep((2, 0))
    gram = invariant_gram(rep.m, rep.gen)
    assert gram == rep.gram
    assert gram.diagonal_entries()[0] == 1  # highest-weight normalization
    assert all(x > 0 for x in gram.diagonal_entries())


def test_evaluate_examples():
    rep = build_rep((1, 0))
    assert evaluate(rep, casimir_element(2, 2)) == Matrix.identity(2).scale(2)
    assert evaluate(rep, PBWElement.one(2)) == Matrix.identity(2)
    rep3 = build_rep((1, 0, 0))
    got = evaluate(rep3, casimir_element(1, 3, "tilde"))
    assert got == Matrix.identity(3).scale(-1)
    with pytest.raises(ValueError):
        evaluate(rep, PBWElement.one(3))


def test_evaluate_matches_block_powers():
    for rho in [(1, 0), (2, 1), (1, 0, -1)]:
        rep = build_rep(rho)
        m = rep.m
        for q in range(4):
            blocks = e_power_matrix(rep, q)
            tblocks = e_power_matrix(rep, q, "tilde")
            for k in range(1, m + 1):
                for l in range(1, m + 1):
                    assert blocks[(k, l)] == evaluate(rep, e_power(k, l, q, m))
                    from kahlergrad.envalg import tilde_e_power

                    assert tblocks[(k, l)] == evaluate(rep, tilde_e_power(k, l, q, m))


def test_matrix_level_composition():
    rep = build_rep((2, 0))
    m = 2
    for p in range(3):
        q = 3 - p
        left = e_power_matrix(rep, p)
        right = e_power_matrix(rep, q)
        full = e_power_matrix(rep, p + q)
        for k in range(1, m + 1):
            for l in range(1, m + 1):
                acc = Matrix.zeros(rep.dim, rep.dim)
                for i in range(1, m + 1):
                    acc = acc + left[(k, i)] * right[(i, l)]
                assert acc == full[(k, l)]


@pytest.mark.parametrize("rho", [(1, 0), (2, -1), (1, 1, 0), (2, 1, 0), (1, 0, -1)])
def test_build_invariants(rho):
    rep = build_rep(rho)
    rep.check_invariants()  # raises on violation
    assert rep.dim == weyl_dimension(rho)


@pytest.mark.parametrize("m", [1, 2])
def test_casimir_scalars_match_formula_small(m):
    for rho in dominant_weights(m, 2):
        rep = build_rep(rho)
        for q in range(5):
            for variant in ("plain", "tilde"):
                mat = casimir_matrix(rep, q, variant)
                assert mat.is_scalar()
                assert mat.diagonal_entries()[0] == casimir_eigenvalue(rho, q, variant)


def test_contragredient_matrix_scalars():
    for rho in [(1, 0), (2, 1), (1, 1, 0)]:
        rep = build_rep(rho)
        rep_t = build_rep(transpose_weight(rho))
        for q in range(4):
            a = casimir_matrix(rep, q, "plain").diagonal_entries()[0]
            b = casimir_matrix(rep_t, q, "tilde").diagonal_entries()[0]
            assert a == b


def test_dimension_budget():
    with pytest.raises(ValueError, match="budget"):
        build_rep((9, 0, -9), dim_budget=10)
