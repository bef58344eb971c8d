import math

import numpy as np
import pytest

from slaterhf.basis import Exponents, OrbitalKind, radial_part
from slaterhf.integrals import CoulombPair, ExchangePair
from slaterhf.oracle import (
    QuadratureError,
    angular_coefficients,
    oracle_core,
    oracle_core_parts,
    oracle_coulomb,
    oracle_exchange,
    radial_Fk,
    radial_Gk,
    radial_integral,
    two_region,
)

# textbook angular weights for real s and p orbitals
EXPECTED_ANGULAR = {
    CoulombPair.J_1s1s: {0: 1.0},
    CoulombPair.J_1s2s: {0: 1.0},
    CoulombPair.J_2s2s: {0: 1.0},
    CoulombPair.J_1s2p: {0: 1.0},
    CoulombPair.J_2s2p: {0: 1.0},
    CoulombPair.J_2p2p_same: {0: 1.0, 2: 4 / 25},
    CoulombPair.J_2p2p_diff: {0: 1.0, 2: -2 / 25},
    ExchangePair.K_1s2s: {0: 1.0},
    ExchangePair.K_1s2p: {1: 1 / 3},
    ExchangePair.K_2s2p: {1: 1 / 3},
    ExchangePair.K_2p2p_diff: {2: 3 / 25},
}


@pytest.mark.parametrize("pair", list(EXPECTED_ANGULAR), ids=lambda p: p.name)
def test_angular_coefficients(pair):
    got = dict(angular_coefficients(pair))
    want = EXPECTED_ANGULAR[pair]
    assert set(got) == set(want)
    for l, c in want.items():
        assert got[l] == pytest.approx(c, abs=1e-12)


def test_angular_rejects_non_pair():
    with pytest.raises(TypeError):
        angular_coefficients("J_1s1s")


@pytest.mark.parametrize("a", [0.5, 1.6875, 7.0])
def test_f0_1s1s(a):
    f = radial_part(OrbitalKind.S1, Exponents(a))
    assert radial_Fk(0, f, f, 2 * a, 2 * a) == pytest.approx(5 * a / 8, rel=1e-10)


def test_g0_equals_f0_for_same_function():
    f = radial_part(OrbitalKind.P2z, Exponents(1.0, 1.0, 2.3))
    for l in (0, 2):
        assert radial_Gk(l, f, f, 4.6, 4.6) == pytest.approx(radial_Fk(l, f, f, 4.6, 4.6), rel=1e-12)


def test_outer_order_independent():
    e = Exponents(3.1, 0.8, 1.2)
    fa = radial_part(OrbitalKind.S1, e)
    fb = radial_part(OrbitalKind.S2, e)
    for l in (0, 1, 2):
        g1 = radial_Gk(l, fa, fb, 1.6, 6.2, outer="r1")
        g2 = radial_Gk(l, fa, fb, 1.6, 6.2, outer="r2")
        assert g1 == pytest.approx(g2, rel=1e-10)


def test_outer_rejects_unknown():
    with pytest.raises(ValueError):
        two_region(np.exp, np.exp, 0, 1.0, 1.0, outer="r3")


def test_truncation_insensitive():
    e = Exponents(2.0, 0.9, 1.1)
    for p in CoulombPair:
        assert oracle_coulomb(p, e, lmax=4) == pytest.approx(oracle_coulomb(p, e, lmax=2), abs=1e-10)
    for p in ExchangePair:
        assert oracle_exchange(p, e, lmax=4) == pytest.approx(oracle_exchange(p, e, lmax=2), abs=1e-10)


def test_radial_integral_error_estimate():
    # int r^4 e^{-r} = 24
    val, err = radial_integral(lambda r: r**4 * np.exp(-r), 1.0, 1.0)
    assert val == pytest.approx(24.0, rel=1e-12)
    assert 0 <= err < 1e-9


def test_radial_integral_nonconvergent_raises():
    with pytest.raises(QuadratureError):
        radial_integral(lambda r: np.sin(1e4 * r) * np.exp(-r), 1.0, 1.0)


@pytest.mark.parametrize("g,Z", [(1.51874, 6), (0.7, 3), (4.0, 10)])
def test_core_2p_closed_form(g, Z):
    assert oracle_core("2p", Exponents(1.0, 1.0, g), Z) == pytest.approx(0.5 * (g * g - Z * g), rel=1e-9)


def test_core_1s_parts():
    t, v = oracle_core_parts("1s", Exponents(1.3), 2)
    assert (t, v) == pytest.approx((1.3**2 / 2, -2 * 1.3), rel=1e-10)


def test_j1s2p_equal_exponents():
    g = 2.5
    assert oracle_coulomb(CoulombPair.J_1s2p, Exponents(g, 1.0, g)) == pytest.approx(7 * g / 16, rel=1e-10)


def test_p_shell_identity():
    e = Exponents(1.0, 1.0, 1.7)
    same = oracle_coulomb(CoulombPair.J_2p2p_same, e)
    diff = oracle_coulomb(CoulombPair.J_2p2p_diff, e)
    k = oracle_exchange(ExchangePair.K_2p2p_diff, e)
    assert same - diff == pytest.approx(2 * k, rel=1e-10)
    assert math.isfinite(same)
