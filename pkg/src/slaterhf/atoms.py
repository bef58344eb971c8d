"""Ground-state configurations and the single-determinant energy functional.

Each atom is one Slater determinant with all unpaired spins up.  Electron
pairs are enumerated directly: every pair contributes a Coulomb integral,
and pairs with parallel spins in different spatial orbitals also subtract
an exchange integral.

Two treatments of the 2p-2p repulsion are available.  ``"full"`` uses the
complete multipole expansion for real p orbitals.  ``"monopole"`` keeps only
the spherical ``l = 0`` part of every p-p pair, which removes the p-p
exchange term (its ``l = 0`` angular weight is zero); this is the treatment
that reproduces the published exponent table and is the default.
"""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations
from operator import mul
from typing import Optional

from . import kernel as K
from .basis import OrbitalKind, P_ORBITALS, ExponentError, Exponents, n_exponents
from .integrals import (
    COULOMB_EXPANSION,
    EXCHANGE_EXPANSION,
    CoulombPair,
    ExchangePair,
    IntegralSet,
    integral_set,
)

P_SHELL_MODELS = ("monopole", "full")
DEFAULT_P_SHELL = "monopole"

SYMBOLS = {2: "He", 3: "Li", 4: "Be", 5: "B", 6: "C", 7: "N", 8: "O", 9: "F", 10: "Ne"}
_TERMS = {2: "1S", 3: "2S", 4: "1S", 5: "2P", 6: "3P", 7: "4S", 8: "3P", 9: "2P", 10: "1S"}

UP, DOWN = +1, -1
SHELLS = ("1s", "2s", "2p")


@dataclass(frozen=True)
class Occupation:
    Z: int
    n_1s: int
    n_2s: int
    n_2p: int
    p_assignment: tuple  # ((OrbitalKind, spin), ...)
    term: str

    @property
    def spinorbitals(self) -> tuple:
        """All occupied ``(OrbitalKind, spin)`` pairs."""
        s = [(OrbitalKind.S1, UP), (OrbitalKind.S1, DOWN)][: self.n_1s]
        s += [(OrbitalKind.S2, UP), (OrbitalKind.S2, DOWN)][: self.n_2s]
        return tuple(s) + self.p_assignment

    @property
    def label(self) -> str:
        parts = []
        for shell, n in (("1s", self.n_1s), ("2s", self.n_2s), ("2p", self.n_2p)):
            if n:
                parts.append(shell if n == 1 else f"{shell}^{n}")
        return " ".join(parts) + f" ^{self.term}"


def configuration(Z: int, doubly_occupied: Optional[OrbitalKind] = None) -> Occupation:
    """Aufbau ground configuration with Hund's-rule p occupancy.

    p electrons fill x, y, z with spin up, then pair up in the same order.
    ``doubly_occupied`` moves the first paired p orbital (only meaningful
    for the p4 case).
    """
    if not 2 <= Z <= 10:
        raise ValueError(f"Z={Z} outside 2..10")
    n_2s = min(max(Z - 2, 0), 2)
    n_2p = max(Z - 4, 0)
    order = list(P_ORBITALS)
    if doubly_occupied is not None:
        order.remove(doubly_occupied)
        order.insert(0, doubly_occupied)
    p = [(k, UP) for k in order][:n_2p]
    p += [(k, DOWN) for k in order][: max(n_2p - 3, 0)]
    return Occupation(Z, 2, n_2s, n_2p, tuple(p), _TERMS[Z])


@dataclass(frozen=True)
class PairCounts:
    """Multiplicities of the core, Coulomb and exchange terms.

    Exchange multiplicities are stored as positive numbers; they enter the
    energy with a minus sign.
    """

    core: dict
    coulomb: dict
    exchange: dict

    def terms(self) -> dict:
        """Signed coefficients keyed by term name, zero entries omitted."""
        out = {f"h_{k}": v for k, v in self.core.items() if v}
        out.update({p.name: v for p, v in self.coulomb.items() if v})
        out.update({p.name: -v for p, v in self.exchange.items() if v})
        return out

    @property
    def n_coulomb(self) -> int:
        return sum(self.coulomb.values())


def _classify(a, b):
    (ka, sa), (kb, sb) = a, b
    same_spin = sa == sb
    if ka.shell == kb.shell == "2p":
        if ka is kb:
            return CoulombPair.J_2p2p_same, None
        return CoulombPair.J_2p2p_diff, ExchangePair.K_2p2p_diff if same_spin else None
    if ka.shell == kb.shell:
        return CoulombPair[f"J_{ka.shell}{kb.shell}"], None
    sh = sorted((ka.shell, kb.shell), key=SHELLS.index)
    return CoulombPair[f"J_{sh[0]}{sh[1]}"], (
        ExchangePair[f"K_{sh[0]}{sh[1]}"] if same_spin else None
    )


def pair_counts(occ: Occupation) -> PairCounts:
    """Enumerate every spinorbital pair of the determinant."""
    core = Counter(k.shell for k, _ in occ.spinorbitals)
    jc, kc = Counter(), Counter()
    for a, b in combinations(occ.spinorbitals, 2):
        j, k = _classify(a, b)
        jc[j] += 1
        if k is not None:
            kc[k] += 1
    return PairCounts(
        {s: core.get(s, 0) for s in SHELLS},
        {p: jc.get(p, 0) for p in CoulombPair},
        {p: kc.get(p, 0) for p in ExchangePair},
    )


def _check_model(p_shell: str) -> None:
    if p_shell not in P_SHELL_MODELS:
        raise ValueError(f"unknown p-shell model {p_shell!r}; use one of {P_SHELL_MODELS}")


def _expansions(p_shell: str):
    coul, exch = dict(COULOMB_EXPANSION), dict(EXCHANGE_EXPANSION)
    if p_shell == "monopole":
        mono = ((0, 1.0, K.F0_2P2P),)
        coul[CoulombPair.J_2p2p_same] = mono
        coul[CoulombPair.J_2p2p_diff] = mono
        exch[ExchangePair.K_2p2p_diff] = ()
    return coul, exch


@lru_cache(maxsize=None)
def energy_weights(Z: int, p_shell: str = DEFAULT_P_SHELL) -> tuple:
    """Kinetic and potential weight vectors over the kernel output.

    ``E = sum(w_kin * v) + sum(w_pot * v)`` with ``v = slater_values(...)``.
    """
    _check_model(p_shell)
    counts = pair_counts(configuration(Z))
    wt = [0.0] * K.N_VALUES
    wv = [0.0] * K.N_VALUES
    for shell, (it, iu) in (("1s", (K.T1S, K.U1S)), ("2s", (K.T2S, K.U2S)), ("2p", (K.T2P, K.U2P))):
        wt[it] += counts.core[shell]
        wv[iu] -= Z * counts.core[shell]
    coul, exch = _expansions(p_shell)
    for pair, n in counts.coulomb.items():
        for _, w, i in coul[pair]:
            wv[i] += n * w
    for pair, n in counts.exchange.items():
        for _, w, i in exch[pair]:
            wv[i] -= n * w
    return tuple(wt), tuple(wv)


def energy_function(Z: int, p_shell: str = DEFAULT_P_SHELL):
    """Fast ``E(x)`` for a plain sequence ``x`` of the exponents Z needs.

    No validation; meant for the optimizer's inner loop.
    """
    wt, wv = energy_weights(Z, p_shell)
    w = tuple(a + b for a, b in zip(wt, wv))
    k = n_exponents(Z)
    values = K.slater_values

    if k == 1:
        def f(x):
            a = x[0]
            return sum(map(mul, w, values(a, a, a)))
    elif k == 2:
        def f(x):
            return sum(map(mul, w, values(x[0], x[1], x[0])))
    else:
        def f(x):
            return sum(map(mul, w, values(x[0], x[1], x[2])))
    return f


def _validate(Z: int, exps: Exponents) -> None:
    if not exps.matches(Z):
        raise ExponentError(f"Z={Z} needs {n_exponents(Z)} exponents, got {exps}")


def energy(Z: int, exps: Exponents, p_shell: str = DEFAULT_P_SHELL) -> float:
    """Total energy of atom ``Z`` at the given exponents, in hartree."""
    _validate(Z, exps)
    return energy_function(Z, p_shell)(exps.as_tuple())


def energy_split(Z: int, exps: Exponents, p_shell: str = DEFAULT_P_SHELL) -> tuple:
    """``(T, V)``: kinetic energy and all potential terms, ``T + V == energy``."""
    _validate(Z, exps)
    wt, wv = energy_weights(Z, p_shell)
    x = exps.as_tuple()
    a = x[0]
    v = K.slater_values(a, x[1] if len(x) > 1 else a, x[2] if len(x) > 2 else a)
    return sum(map(mul, wt, v)), sum(map(mul, wv, v))


def energy_from_set(counts: PairCounts, ints: IntegralSet, p_shell: str = DEFAULT_P_SHELL) -> float:
    """Dot product of pair multiplicities with an evaluated :class:`IntegralSet`."""
    _check_model(p_shell)
    e = 0.0
    for shell, n in counts.core.items():
        if n:
            e += n * getattr(ints, f"h_{shell}").value
    for pair, n in counts.coulomb.items():
        if n:
            if p_shell == "monopole" and pair.name.startswith("J_2p2p"):
                e += n * ints.F0_2p2p
            else:
                e += n * getattr(ints, pair.name)
    for pair, n in counts.exchange.items():
        if n and not (p_shell == "monopole" and pair is ExchangePair.K_2p2p_diff):
            e -= n * getattr(ints, pair.name)
    return e


@dataclass(frozen=True)
class ReferenceRow:
    Z: int
    symbol: str
    configuration: str
    alpha: float
    beta: Optional[float]
    gamma: Optional[float]
    E_calc: float
    E_bestHF: float
    E_exact: float

    @property
    def exponents(self) -> Exponents:
        return Exponents(self.alpha, self.beta, self.gamma)

    @property
    def best_hf_anomalous(self) -> bool:
        # the carbon row repeats the calculated energy in the best-HF column
        return self.E_bestHF == self.E_calc


def _opt(cell: str) -> Optional[float]:
    return None if cell.strip() == "-" else float(cell)


@lru_cache(maxsize=1)
def reference_table() -> dict:
    """Published results keyed by Z."""
    text = resources.files("slaterhf").joinpath("data/reference.tsv").read_text()
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    rows = {}
    for rec in csv.DictReader(lines, delimiter="\t"):
        z = int(rec["Z"])
        rows[z] = ReferenceRow(
            z,
            rec["symbol"],
            rec["configuration"],
            float(rec["alpha"]),
            _opt(rec["beta"]),
            _opt(rec["gamma"]),
            float(rec["E_calc"]),
            float(rec["E_bestHF"]),
            float(rec["E_exact"]),
        )
    return rows


def relative_gap(e: float, ref: float) -> float:
    return abs(e - ref) / abs(ref)


def virial_residual(T: float, V: float) -> float:
    """``|2T + V| / |T + V|``; zero at a scaling-stationary point."""
    return abs(2.0 * T + V) / abs(T + V)


__all__ = [
    "DEFAULT_P_SHELL",
    "Occupation",
    "PairCounts",
    "ReferenceRow",
    "SYMBOLS",
    "configuration",
    "energy",
    "energy_from_set",
    "energy_function",
    "energy_split",
    "energy_weights",
    "integral_set",
    "pair_counts",
    "reference_table",
    "relative_gap",
    "virial_residual",
]
