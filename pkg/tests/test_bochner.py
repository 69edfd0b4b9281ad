from fractions import Fraction as F

import pytest

from kahlergrad.bochner import (
    bochner_identity,
    constant_curvature_scalar,
    cpm_holomorphic_eigenvalue,
    dolbeault_identities,
    kirchberg_bound,
    weitzenboeck,
)
from kahlergrad.weights import dominant_weights


def curvature_dict(ident):
    return {t.token: t.coeff for t in ident.curvature}


def by_label(idents):
    return {x.label: x for x in idents}


def test_degree_0_family():
    idents = by_label(bochner_identity((1, 0), 0))
    assert set(idents) == {
        "degree-0-minus-part",
        "degree-0-plus-part",
        "degree-0-laplacian",
        "degree-0-curvature",
    }
    lap = idents["degree-0-laplacian"]
    assert lap.minus_coeffs == (F(1), F(1)) and lap.plus_coeffs == (F(1), F(1))
    assert curvature_dict(lap) == {"nabla*nabla": F(1)}
    diff = idents["degree-0-curvature"]
    assert diff.plus_coeffs == (F(-1), F(-1))
    assert curvature_dict(diff) == {"R^0": F(1)}
    assert curvature_dict(idents["degree-0-minus-part"]) == {"nabla10*nabla10": F(1)}
    assert curvature_dict(idents["degree-0-plus-part"]) == {"nabla01*nabla01": F(1)}


def test_degree_1():
    (ident,) = bochner_identity((1, 0), 1)
    assert ident.minus_coeffs == (F(2), F(0))
    assert ident.plus_coeffs == (F(-1), F(1))
    assert curvature_dict(ident) == {"R^1": F(1)}
    # both lowered weights (0,0) and (1,-1) stay weakly decreasing here
    assert ident.minus_valid == (True, True)


def test_degree_2_template():
    # hand-computed for rho=(1,0): w_- = (2,0), w_+ = (-1,1), tilde Casimirs
    # tc_0 = 2, tc_1 = -1 give K_1(-tc) = 2, K_2(-tc) = 3
    (ident,) = bochner_identity((1, 0), 2)
    assert ident.minus_coeffs == (F(0), F(4))
    assert ident.plus_coeffs == (F(-2), F(-6))
    assert curvature_dict(ident) == {"R^0": F(4), "R^1": F(-4), "R^2": F(1)}


def test_weitzenboeck_example():
    ident = weitzenboeck((1, 0))
    assert ident.minus_coeffs == (F(4), F(0))
    assert ident.plus_coeffs == (F(0), F(4))
    assert curvature_dict(ident) == {
        "nabla*nabla": F(1),
        "R^1": F(2),
        "R^0": F(-1),
    }


def test_weitzenboeck_exterior_pattern():
    m, p = 4, 2
    ident = weitzenboeck(tuple([1] * p + [0] * (m - p)))
    assert ident.minus_coeffs[p - 1] == 2 * (m - p + 1)
    assert ident.plus_coeffs[p] == 2 * (p + 1)


def test_weitzenboeck_rank_one_rejected():
    with pytest.raises(ValueError, match="rank"):
        weitzenboeck((2, 2))


@pytest.mark.parametrize("m", [2, 3])
def test_weitzenboeck_coefficients_nonnegative(m):
    for rho in dominant_weights(m, 3):
        if rho.entries[0] == rho.entries[-1]:
            continue
        ident = weitzenboeck(rho)
        assert all(c >= 0 for c in ident.minus_coeffs)
        assert all(c >= 0 for c in ident.plus_coeffs)


def test_constant_curvature_scalar():
    # c_0 c_1 + c_1 at rho=(1,0): q=0 gives c_0*c_1 + c_1 = 2+1 = 3
    assert constant_curvature_scalar((1, 0), 0, 2) == 3
    assert constant_curvature_scalar((1, 0), 0, 4) == 6  # linear in r
    for q in range(3):
        assert constant_curvature_scalar((0, 0, 0), q, 5) == 0


def test_cpm_eigenvalue():
    assert cpm_holomorphic_eigenvalue((1, 0), 1, 1) == F(3, 4)
    assert cpm_holomorphic_eigenvalue((1, 0), 1, 0) == 0
    # (1,-1) is still weakly decreasing, so i=2 is a real gradient here
    assert cpm_holomorphic_eigenvalue((1, 0), 2, 1) == F(3, 4)
    with pytest.raises(ValueError):
        cpm_holomorphic_eigenvalue((1, 0, 0), 2, 1)  # (1,-1,0) not decreasing


def test_kirchberg_examples():
    assert kirchberg_bound(2).bound_coefficient == F(2)
    b3 = kirchberg_bound(3)
    assert b3.bound_coefficient == F(4, 3) and b3.witness_p == 1
    assert kirchberg_bound(12).bound_coefficient == F(12, 11)
    with pytest.raises(ValueError):
        kirchberg_bound(1)


@pytest.mark.parametrize("m", range(2, 51))
def test_kirchberg_closed_forms(m):
    b = kirchberg_bound(m)
    expected = F(m, m - 1) if m % 2 == 0 else F(m + 1, m)
    assert b.bound_coefficient == expected
    # witness consistency with the min-max definition
    val = max(
        F(2 * b.witness_p + 2, 2 * b.witness_p + 1),
        F(2 * m - 2 * b.witness_p, 2 * m - 2 * b.witness_p - 1),
    )
    assert val == expected


def test_dolbeault_boundary_p0():
    m = 3
    idents = by_label(dolbeault_identities(m, 0))
    d = idents["dirac-estimate"]
    assert d.minus_coeffs[m - 1] == -1 and d.plus_coeffs[0] == 1
    assert curvature_dict(d) == {"kappa": F(1, 4)}
    assert d.dbar["dbar_star_dbar"] == F(1, 2)
    lich = idents["lichnerowicz"]
    assert lich.plus_coeffs[0] == 2 and all(c == 0 for c in lich.minus_coeffs)
    assert curvature_dict(lich) == {"nabla*nabla": F(1), "kappa": F(1, 4)}


def test_dolbeault_boundary_pm():
    m = 3
    idents = by_label(dolbeault_identities(m, m))
    d = idents["dirac-estimate"]
    assert d.minus_coeffs[m - 1] == 1 and d.plus_coeffs[0] == -1
    assert curvature_dict(d) == {"kappa": F(1, 4)}
    lich = idents["lichnerowicz"]
    assert lich.minus_coeffs[m - 1] == 2
    assert curvature_dict(lich) == {"nabla*nabla": F(1), "kappa": F(1, 4)}


@pytest.mark.parametrize("m,p", [(3, 1), (3, 2), (4, 2), (5, 3)])
def test_dolbeault_generic(m, p):
    idents = by_label(dolbeault_identities(m, p))
    d = idents["dirac-estimate"]
    assert d.dbar["dbar_dbar_star"] == F(2 * m - 2 * p + 1, 2 * m - 2 * p + 2)
    assert d.dbar["dbar_star_dbar"] == F(2 * p + 1, 2 * p + 2)
    assert d.minus_coeffs[p - 1] == 2 * m - 2 * p + 1
    assert d.minus_coeffs[m - 1] == -1
    assert d.plus_coeffs[p] == 2 * p + 1
    assert d.plus_coeffs[0] == -1
    wz = idents["dolbeault-weitzenboeck"]
    assert wz.minus_coeffs[p - 1] == 2 * (m - p + 1)
    assert wz.plus_coeffs[p] == 2 * (p + 1)
    assert curvature_dict(wz) == {"nabla*nabla": F(1), "R^0": F(1)}
    deg1 = idents["dolbeault-degree-1"]
    assert deg1.minus_coeffs[p - 1] == m - p + 1
    assert deg1.plus_coeffs[0] == -1 and deg1.plus_coeffs[p] == p
    assert curvature_dict(deg1) == {"R^0": F(1)}


@pytest.mark.parametrize("m", [2, 3, 4])
def test_lichnerowicz_pattern_all_degrees(m):
    for p in range(m + 1):
        idents = by_label(dolbeault_identities(m, p))
        assert curvature_dict(idents["lichnerowicz"]) == {
            "nabla*nabla": F(1),
            "kappa": F(1, 4),
        }


def test_dolbeault_input_validation():
    with pytest.raises(ValueError):
        dolbeault_identities(3, 4)
    with pytest.raises(ValueError):
        bochner_identity((1, 0), -1)
