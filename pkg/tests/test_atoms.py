from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from slaterhf.atoms import (
    P_SHELL_MODELS,
    configuration,
    energy,
    energy_from_set,
    energy_split,
    pair_counts,
    reference_table,
    virial_residual,
)
from slaterhf.basis import ExponentError, Exponents, P_ORBITALS
from slaterhf.integrals import CoulombPair as J, ExchangePair as K, integral_set

from conftest import random_exponents

ALL_Z = range(2, 11)
CARBON = Exponents(5.71244, 1.98775, 1.51874)


def exps_for(Z, e):
    return Exponents.for_atom(Z, e.as_tuple())


def test_configuration_carbon():
    occ = configuration(6)
    assert (occ.n_1s, occ.n_2s, occ.n_2p, occ.term) == (2, 2, 2, "3P")
    kinds = [k for k, _ in occ.p_assignment]
    spins = {s for _, s in occ.p_assignment}
    assert len(set(kinds)) == 2 and len(spins) == 1


def test_configuration_helium_and_neon():
    he = configuration(2)
    assert (he.n_1s, he.n_2s, he.n_2p, he.term) == (2, 0, 0, "1S")
    ne = configuration(10)
    assert ne.n_2p == 6
    assert Counter(k for k, _ in ne.p_assignment) == {k: 2 for k in P_ORBITALS}


@pytest.mark.parametrize("Z", ALL_Z)
def test_configuration_matches_table(Z):
    occ = configuration(Z)
    assert occ.n_1s + occ.n_2s + occ.n_2p == Z
    row = reference_table()[Z]
    assert row.configuration.replace("^", "").replace(" ", "") == occ.label.replace("^", "").replace(" ", "")
    # Hund: distinct orbitals before pairing, max multiplicity
    ups = [k for k, s in occ.p_assignment if s > 0]
    assert len(ups) == len(set(ups)) == min(occ.n_2p, 3)


@pytest.mark.parametrize("Z", [1, 11])
def test_configuration_out_of_range(Z):
    with pytest.raises(ValueError):
        configuration(Z)


def test_pair_counts_carbon_terms():
    assert pair_counts(configuration(6)).terms() == {
        "h_1s": 2, "h_2s": 2, "h_2p": 2,
        "J_1s1s": 1, "J_2s2s": 1,
        "J_1s2s": 4, "K_1s2s": -2,
        "J_1s2p": 4, "K_1s2p": -2,
        "J_2s2p": 4, "K_2s2p": -2,
        "J_2p2p_diff": 1, "K_2p2p_diff": -1,
    }


def test_pair_counts_nitrogen():
    c = pair_counts(configuration(7))
    assert (c.coulomb[J.J_2p2p_diff], c.exchange[K.K_2p2p_diff], c.coulomb[J.J_2p2p_same]) == (3, 3, 0)
    assert (c.coulomb[J.J_1s2p], c.exchange[K.K_1s2p]) == (6, 3)
    assert (c.coulomb[J.J_2s2p], c.exchange[K.K_2s2p]) == (6, 3)


def test_pair_counts_neon():
    c = pair_counts(configuration(10))
    assert (c.coulomb[J.J_2p2p_same], c.coulomb[J.J_2p2p_diff], c.exchange[K.K_2p2p_diff]) == (3, 12, 6)


@pytest.mark.parametrize("Z", ALL_Z)
def test_pair_count_conservation(Z):
    occ = configuration(Z)
    c = pair_counts(occ)
    assert c.n_coulomb == Z * (Z - 1) // 2
    assert c.core == {"1s": occ.n_1s, "2s": occ.n_2s, "2p": occ.n_2p}
    for kp in K:
        jp = {K.K_1s2s: J.J_1s2s, K.K_1s2p: J.J_1s2p, K.K_2s2p: J.J_2s2p, K.K_2p2p_diff: J.J_2p2p_diff}[kp]
        assert c.exchange[kp] <= c.coulomb[jp]


@pytest.mark.parametrize("model", P_SHELL_MODELS)
def test_oxygen_assignment_invariance(model):
    e = Exponents(7.66, 2.25, 2.23)
    occs = [configuration(8, doubly_occupied=k) for k in P_ORBITALS]
    assert {occ.p_assignment[3][0] for occ in occs} == set(P_ORBITALS)
    counts = [pair_counts(o) for o in occs]
    assert all(c == counts[0] for c in counts)
    ints = integral_set(e, 8)
    es = [energy_from_set(c, ints, model) for c in counts]
    assert es[0] == es[1] == es[2] == pytest.approx(energy(8, e, model), rel=1e-13)


def test_energy_helium():
    assert energy(2, Exponents(27 / 16)) == pytest.approx(-2.84765625, rel=1e-14)


def test_energy_carbon_real_orbital_functional():
    assert energy(6, CARBON, p_shell="full") == pytest.approx(-37.5471, abs=5e-4)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.05, 50.0))
def test_helium_functional(a):
    assert energy(2, Exponents(a)) == pytest.approx(a * a - 4 * a + 5 * a / 8, rel=1e-12, abs=1e-12)


def test_energy_split_helium():
    a = 27 / 16
    t, v = energy_split(2, Exponents(a))
    assert t == pytest.approx(a * a, rel=1e-14)
    assert v == pytest.approx(-2 * t, rel=1e-14)
    assert virial_residual(t, v) < 1e-13


@pytest.mark.parametrize("model", P_SHELL_MODELS)
def test_energy_split_properties(rng, model):
    for Z in ALL_Z:
        for e in random_exponents(rng, 5, hi=10.0):
            ez = exps_for(Z, e)
            t, v = energy_split(Z, ez, model)
            assert t > 0
            assert t + v == pytest.approx(energy(Z, ez, model), rel=1e-13, abs=1e-13)
            t2, v2 = energy_split(Z, ez.scaled(2.0), model)
            assert t2 == pytest.approx(4 * t, rel=1e-12)
            assert v2 == pytest.approx(2 * v, rel=1e-12)


@pytest.mark.parametrize("model", P_SHELL_MODELS)
def test_energy_matches_integral_set_path(rng, model):
    for Z in ALL_Z:
        for e in random_exponents(rng, 5):
            ez = exps_for(Z, e)
            via_set = energy_from_set(pair_counts(configuration(Z)), integral_set(ez, Z), model)
            assert energy(Z, ez, model) == pytest.approx(via_set, rel=1e-12, abs=1e-12)


def test_energy_errors():
    with pytest.raises(ExponentError):
        energy(6, Exponents(5.0, 2.0))
    with pytest.raises(ValueError):
        energy(2, Exponents(1.7), p_shell="quadrupole")


def test_reference_table_ordering():
    table = reference_table()
    assert sorted(table) == list(ALL_Z)
    for Z, row in table.items():
        assert row.exponents.matches(Z)
        assert row.E_exact <= row.E_bestHF
        if Z == 6:
            assert row.best_hf_anomalous
        else:
            assert row.E_bestHF <= row.E_calc
            assert not row.best_hf_anomalous
