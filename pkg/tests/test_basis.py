import math

import numpy as np
import pytest

from slaterhf.basis import (
    ExponentError,
    Exponents,
    OrbitalKind,
    P_ORBITALS,
    evaluate,
    n_exponents,
    radial_part,
)
from slaterhf.oracle import oracle_overlap, radial_integral

from conftest import random_exponents

ALL_KINDS = list(OrbitalKind)


def test_1s_at_origin():
    assert evaluate(OrbitalKind.S1, Exponents(1.0), 0.0) == pytest.approx(1 / math.sqrt(math.pi))
    assert evaluate(OrbitalKind.S1, Exponents(1.0), 0.0) == pytest.approx(0.564190, abs=1e-6)


@pytest.mark.parametrize("kind", P_ORBITALS)
def test_p_vanishes_at_origin(kind):
    assert evaluate(kind, Exponents(1.0, 1.0, 2.3), 0.0, 0.4, 1.1) == 0.0


def test_2s_node():
    assert evaluate(OrbitalKind.S2, Exponents(1.0, 1.0), 1.5) == pytest.approx(0.0, abs=1e-15)


def test_radial_1s_origin():
    a = 1.7
    assert radial_part(OrbitalKind.S1, Exponents(a))(0.0) == pytest.approx(2 * a**1.5)


def test_matches_closed_orbital_formulas():
    # amplitudes written out exactly as in the orbital definitions
    a, b, g = 2.1, 0.9, 1.3
    e = Exponents(a, b, g)
    r, th, ph = 0.8, 0.7, 2.0
    s1 = a**1.5 / math.sqrt(math.pi) * math.exp(-a * r)
    s2 = math.sqrt(3 * b**5 / (math.pi * (a * a - a * b + b * b))) * (1 - (a + b) * r / 3) * math.exp(-b * r)
    p = g**2.5 / math.sqrt(math.pi) * r * math.exp(-g * r)
    assert evaluate(OrbitalKind.S1, e, r, th, ph) == pytest.approx(s1, rel=1e-14)
    assert evaluate(OrbitalKind.S2, e, r, th, ph) == pytest.approx(s2, rel=1e-14)
    assert evaluate(OrbitalKind.P2x, e, r, th, ph) == pytest.approx(p * math.sin(th) * math.cos(ph), rel=1e-14)
    assert evaluate(OrbitalKind.P2y, e, r, th, ph) == pytest.approx(p * math.sin(th) * math.sin(ph), rel=1e-14)
    assert evaluate(OrbitalKind.P2z, e, r, th, ph) == pytest.approx(p * math.cos(th), rel=1e-14)


def test_normalization_and_orthogonality(rng):
    for e in random_exponents(rng, 200):
        for k in ALL_KINDS:
            assert oracle_overlap(k, k, e) == pytest.approx(1.0, abs=1e-10)
        assert abs(oracle_overlap(OrbitalKind.S1, OrbitalKind.S2, e)) < 1e-10


def test_radial_orthogonality_quadrature():
    e = Exponents(3.0, 0.8)
    f, g = radial_part(OrbitalKind.S1, e), radial_part(OrbitalKind.S2, e)
    val, _ = radial_integral(lambda r: f(r) * g(r) * r * r, 1.6, 6.0)
    assert abs(val) < 1e-12


def test_p_orbitals_mutually_orthogonal():
    e = Exponents(1.0, 1.0, 1.7)
    for i, a in enumerate(P_ORBITALS):
        for j, b in enumerate(P_ORBITALS):
            assert oracle_overlap(a, b, e) == pytest.approx(float(i == j), abs=1e-10)


def test_2s_denominator_positive(rng):
    a, b = rng.uniform(1e-3, 50, size=(2, 1000))
    assert np.all(a * a - a * b + b * b > 0)


@pytest.mark.parametrize("bad", [0.0, -1.0, 50.5, math.nan])
def test_exponent_domain(bad):
    with pytest.raises(ExponentError):
        Exponents(bad)
    with pytest.raises(ExponentError):
        Exponents(1.0, bad)


def test_missing_exponent():
    with pytest.raises(ExponentError):
        evaluate(OrbitalKind.S2, Exponents(1.0), 0.5)
    with pytest.raises(ExponentError):
        radial_part(OrbitalKind.P2z, Exponents(1.0, 1.0))


def test_negative_radius():
    with pytest.raises(ValueError):
        evaluate(OrbitalKind.S1, Exponents(1.0), -0.1)


@pytest.mark.parametrize("Z,k", [(2, 1), (3, 2), (4, 2), (5, 3), (10, 3)])
def test_presence_pattern(Z, k):
    assert n_exponents(Z) == k
    e = Exponents.for_atom(Z, [1.0, 2.0, 3.0])
    assert len(e.as_tuple()) == k
    assert e.matches(Z)
