"""Closed-form core, Coulomb and exchange integrals.

Radial parts come from :mod:`slaterhf.kernel`.  Angular parts are the
rational weights of the multipole expansion of ``1/r12`` for real s and p
orbitals; :func:`slaterhf.oracle.angular_coefficients` recomputes them by
brute-force spherical quadrature.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, fields
from typing import Optional

from . import kernel as K
from .basis import ExponentError, Exponents, n_exponents


class CoulombPair(enum.Enum):
    J_1s1s = ("1s", "1s")
    J_2s2s = ("2s", "2s")
    J_1s2s = ("1s", "2s")
    J_1s2p = ("1s", "2p")
    J_2s2p = ("2s", "2p")
    J_2p2p_same = ("2p", "2p")
    J_2p2p_diff = ("2p", "2p'")

    @property
    def shells(self) -> tuple:
        return tuple(s[:2] for s in self.value)


class ExchangePair(enum.Enum):
    K_1s2s = ("1s", "2s")
    K_1s2p = ("1s", "2p")
    K_2s2p = ("2s", "2p")
    K_2p2p_diff = ("2p", "2p'")

    @property
    def shells(self) -> tuple:
        return tuple(s[:2] for s in self.value)


# (multipole order, weight, kernel index of the radial integral)
COULOMB_EXPANSION = {
    CoulombPair.J_1s1s: ((0, 1.0, K.F0_1S1S),),
    CoulombPair.J_2s2s: ((0, 1.0, K.F0_2S2S),),
    CoulombPair.J_1s2s: ((0, 1.0, K.F0_1S2S),),
    CoulombPair.J_1s2p: ((0, 1.0, K.F0_1S2P),),
    CoulombPair.J_2s2p: ((0, 1.0, K.F0_2S2P),),
    CoulombPair.J_2p2p_same: ((0, 1.0, K.F0_2P2P), (2, 4.0 / 25.0, K.F2_2P2P)),
    CoulombPair.J_2p2p_diff: ((0, 1.0, K.F0_2P2P), (2, -2.0 / 25.0, K.F2_2P2P)),
}

EXCHANGE_EXPANSION = {
    ExchangePair.K_1s2s: ((0, 1.0, K.G0_1S2S),),
    ExchangePair.K_1s2p: ((1, 1.0 / 3.0, K.G1_1S2P),),
    ExchangePair.K_2s2p: ((1, 1.0 / 3.0, K.G1_2S2P),),
    # the 2p radial functions coincide, so G2 == F2
    ExchangePair.K_2p2p_diff: ((2, 3.0 / 25.0, K.F2_2P2P),),
}

_CORE_INDEX = {"1s": (K.T1S, K.U1S), "2s": (K.T2S, K.U2S), "2p": (K.T2P, K.U2P)}


@dataclass(frozen=True)
class CoreIntegral:
    """One-electron integral split into kinetic and nuclear-attraction parts."""

    kinetic: float
    potential: float

    @property
    def value(self) -> float:
        return self.kinetic + self.potential

    def __float__(self) -> float:
        return self.value


def radial_values(exps: Exponents) -> tuple:
    """Kernel output for ``exps``; absent exponents get harmless placeholders."""
    a = exps.alpha
    b = a if exps.beta is None else exps.beta
    g = a if exps.gamma is None else exps.gamma
    return K.slater_values(a, b, g)


def _needs(shells, exps: Exponents) -> None:
    for s in shells:
        exps.require(s)


def core(kind: str, exps: Exponents, Z: int) -> CoreIntegral:
    """Kinetic plus nuclear attraction for one electron in ``kind`` (1s/2s/2p)."""
    if kind not in _CORE_INDEX:
        raise ValueError(f"unknown orbital kind {kind!r}")
    if Z <= 0:
        raise ValueError("Z must be positive")
    exps.require(kind)
    it, iu = _CORE_INDEX[kind]
    v = radial_values(exps)
    return CoreIntegral(v[it], -Z * v[iu])


def _combine(expansion, v) -> float:
    return sum(w * v[i] for _, w, i in expansion)


def coulomb(pair: CoulombPair, exps: Exponents) -> float:
    _needs(pair.shells, exps)
    return _combine(COULOMB_EXPANSION[pair], radial_values(exps))


def exchange(pair: ExchangePair, exps: Exponents) -> float:
    """Spatial exchange integral; the spin factor is left to pair counting."""
    _needs(pair.shells, exps)
    return _combine(EXCHANGE_EXPANSION[pair], radial_values(exps))


@dataclass(frozen=True)
class IntegralSet:
    h_1s: CoreIntegral
    J_1s1s: float
    h_2s: Optional[CoreIntegral] = None
    h_2p: Optional[CoreIntegral] = None
    J_2s2s: Optional[float] = None
    J_1s2s: Optional[float] = None
    J_1s2p: Optional[float] = None
    J_2s2p: Optional[float] = None
    J_2p2p_same: Optional[float] = None
    J_2p2p_diff: Optional[float] = None
    K_1s2s: Optional[float] = None
    K_1s2p: Optional[float] = None
    K_2s2p: Optional[float] = None
    K_2p2p_diff: Optional[float] = None
    # monopole part of the 2p-2p repulsion, kept for the monopole p-shell model
    F0_2p2p: Optional[float] = None

    def populated(self) -> dict:
        """Entries that were evaluated, excluding the auxiliary ``F0_2p2p``."""
        return {
            f.name: getattr(self, f.name)
            for f in fields(self)
            if getattr(self, f.name) is not None and f.name != "F0_2p2p"
        }


def integral_set(exps: Exponents, Z: int) -> IntegralSet:
    """Every distinct integral the energy of atom ``Z`` needs, in one kernel call."""
    k = n_exponents(Z)
    if not exps.matches(Z):
        raise ExponentError(f"Z={Z} needs exactly {k} exponents, got {exps}")
    v = radial_values(exps)
    out = {
        "h_1s": CoreIntegral(v[K.T1S], -Z * v[K.U1S]),
        "J_1s1s": v[K.F0_1S1S],
    }
    if Z >= 3:
        out["h_2s"] = CoreIntegral(v[K.T2S], -Z * v[K.U2S])
        out["J_1s2s"] = v[K.F0_1S2S]
        out["K_1s2s"] = v[K.G0_1S2S]
    if Z >= 4:
        out["J_2s2s"] = v[K.F0_2S2S]
    if Z >= 5:
        out["h_2p"] = CoreIntegral(v[K.T2P], -Z * v[K.U2P])
        for pair in (CoulombPair.J_1s2p, CoulombPair.J_2s2p):
            out[pair.name] = _combine(COULOMB_EXPANSION[pair], v)
        for pair in (ExchangePair.K_1s2p, ExchangePair.K_2s2p):
            out[pair.name] = _combine(EXCHANGE_EXPANSION[pair], v)
    if Z >= 6:
        out["J_2p2p_diff"] = _combine(COULOMB_EXPANSION[CoulombPair.J_2p2p_diff], v)
        out["K_2p2p_diff"] = _combine(EXCHANGE_EXPANSION[ExchangePair.K_2p2p_diff], v)
        out["F0_2p2p"] = v[K.F0_2P2P]
    if Z >= 8:
        out["J_2p2p_same"] = _combine(COULOMB_EXPANSION[CoulombPair.J_2p2p_same], v)
    return IntegralSet(**out)
