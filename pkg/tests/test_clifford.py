from fractions import Fraction as F

import pytest

from kahlergrad.clifford import (
    build_system,
    derived_representation,
    verify_cross_relations,
    verify_equivariance,
    verify_adjoint_pairing,
    verify_relations,
    verify_spinor_model,
)
from kahlergrad.gtrep import build_rep
from kahlergrad.linalg import Matrix
from kahlergrad.weights import HighestWeight, weyl_dimension


def test_trivial_module_plus_side():
    rep = build_rep((0, 0, 0))
    sys = build_system(rep, "+")
    dims = [t.dim if t else 0 for t in sys.targets]
    assert dims == [3, 0, 0]  # only mu_1 is dominant; natural module appears
    # gamma_{+1} equals m: the trace constant over the only component
    acc = Matrix.zeros(1, 1)
    for k in range(1, 4):
        acc = acc + sys.p_star_p(1, k, k)
    assert acc == Matrix([[3]])


@pytest.mark.parametrize("m", [2, 3])
def test_natural_module_minus_decomposition(m):
    rho = tuple([1] + [0] * (m - 1))
    rep = build_rep(rho)
    sys = build_system(rep, "-")
    dims = [t.dim if t else 0 for t in sys.targets]
    expected = [0] * m
    expected[0] = 1            # the trivial module
    expected[m - 1] = m * m - 1  # the adjoint-type module
    assert dims == expected


@pytest.mark.parametrize("p", [0, 1, 2])
def test_exterior_module_plus_targets(p):
    m = 3
    rho = tuple([1] * p + [0] * (m - p))
    rep = build_rep(rho)
    sys = build_system(rep, "+")
    valid = [t.index for t in sys.targets if t]
    if p == 0:
        assert valid == [1]
    elif p < m:
        assert valid == [1, p + 1]
    else:
        assert valid == [1]


def test_verify_relations_small():
    rep = build_rep((1, 0))
    plus = build_system(rep, "+")
    minus = build_system(rep, "-")
    out = verify_relations(plus, q_max=2, paired=minus, cross_q_max=2)
    assert out.passed, [it.describe() for it in out.failures()]
    out = verify_relations(minus, q_max=2)
    assert out.passed, [it.describe() for it in out.failures()]


def test_cross_relations_report_rank():
    rep = build_rep((1, 0))
    plus = build_system(rep, "+")
    minus = build_system(rep, "-")
    out = verify_cross_relations(plus, minus, q_max=2)
    assert out.passed
    ranks = [it for it in out.items if it.tag == "cross-sign-rank"]
    assert len(ranks) == 1
    assert int(ranks[0].params["rank"]) <= int(ranks[0].params["symbols"])


def test_exterior_annihilation_identity():
    # (m - p + 1) p* p on the lowering map recovers the matrix units
    m, p = 3, 1
    rep = build_rep((1, 0, 0))
    minus = build_system(rep, "-")
    for k in range(1, m + 1):
        for l in range(1, m + 1):
            got = minus.p_star_p(p, k, l).scale(m - p + 1)
            assert got == rep.gen[(k, l)]


@pytest.mark.parametrize("rho", [(1, 0), (1, 0, 0), (1, 1, 0)])
def test_equivariance(rho):
    rep = build_rep(rho)
    for sign in "+-":
        out = verify_equivariance(build_system(rep, sign))
        assert out.passed, [it.describe() for it in out.failures()]


def test_adjoint_pairing_trivial_module():
    m = 2
    rep = build_rep((0, 0))
    plus = build_system(rep, "+")
    raised = derived_representation(plus, 1, validate=True)
    assert raised.rho == HighestWeight((1, 0))
    minus_on_target = build_system(raised, "-")
    out = verify_adjoint_pairing(plus, minus_on_target, 1)
    assert out.passed, [it.describe() for it in out.failures()]
    ratio = [it for it in out.items if it.tag == "raise-lower-ratio-squared"][0]
    assert ratio.params["ratio_squared"] == F(1, 2)  # 1/gamma_{+1} = 1/m


def test_adjoint_pairing_natural_module():
    rep = build_rep((1, 0))
    plus = build_system(rep, "+")
    raised = derived_representation(plus, 1)
    minus_on_target = build_system(raised, "-")
    out = verify_adjoint_pairing(plus, minus_on_target, 1)
    assert out.passed, [it.describe() for it in out.failures()]
    ratio = [it for it in out.items if it.tag == "raise-lower-ratio-squared"][0]
    # gamma_{+1} = 1 - 1/(w_{+1} - w_{+2}) = 3/2
    assert ratio.params["ratio_squared"] == F(2, 3)


def test_adjoint_pairing_invalid_shift_is_skipped():
    rep = build_rep((1, 0, 0))
    plus = build_system(rep, "+")
    out = verify_adjoint_pairing(plus, None, 3)  # (1,0,1) is not dominant
    assert out.passed
    assert out.items[0].status == "not-applicable"


def test_adjoint_pairing_rejects_mismatched_system():
    rep = build_rep((1, 0))
    plus = build_system(rep, "+")
    with pytest.raises(ValueError):
        verify_adjoint_pairing(plus, plus, 1)
    wrong = build_system(build_rep((2, 0)), "-")
    with pytest.raises(ValueError):
        verify_adjoint_pairing(plus, wrong, 2)  # raised weight is (1,1), not (2,0)


def test_derived_representation_is_a_module():
    rep = build_rep((1, 0, 0))
    plus = build_system(rep, "+")
    raised = derived_representation(plus, 2, validate=True)  # (1,1,0)
    assert raised.dim == weyl_dimension((1, 1, 0))


@pytest.mark.parametrize("m", [2, 3])
def test_spinor_model(m):
    out = verify_spinor_model(m)
    assert out.passed, [it.describe() for it in out.failures()][:5]


def test_build_system_rejects_bad_sign():
    rep = build_rep((1, 0))
    with pytest.raises(ValueError):
        build_system(rep, "x")
