"""Single-zeta 1s, 2s and 2p Slater-type orbitals.

The 2s function carries a linear factor that makes it orthogonal to the 1s
function for every pair of exponents, so the three orbitals form an
orthonormal set without any further Gram-Schmidt step.  Every orbital is
stored as ``R(r) * Y(theta, phi)`` with a real angular factor normalized
over the unit sphere.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

MAX_EXPONENT = 50.0

_INV_SQRT_4PI = 1.0 / math.sqrt(4.0 * math.pi)
_SQRT_3_OVER_4PI = math.sqrt(3.0 / (4.0 * math.pi))


class ExponentError(ValueError):
    """Raised when an exponent is missing or outside ``(0, MAX_EXPONENT]``."""


class OrbitalKind(enum.Enum):
    S1 = "1s"
    S2 = "2s"
    P2x = "2px"
    P2y = "2py"
    P2z = "2pz"

    @property
    def shell(self) -> str:
        """Subshell label: ``"1s"``, ``"2s"`` or ``"2p"``."""
        return self.value[:2]

    @property
    def l(self) -> int:
        return 1 if self.shell == "2p" else 0


P_ORBITALS = (OrbitalKind.P2x, OrbitalKind.P2y, OrbitalKind.P2z)


def _check(name: str, value: float) -> float:
    value = float(value)
    if not (0.0 < value <= MAX_EXPONENT) or math.isnan(value):
        raise ExponentError(f"{name}={value!r} outside (0, {MAX_EXPONENT}]")
    return value


@dataclass(frozen=True)
class Exponents:
    """Orbital exponents in inverse bohr.

    ``beta`` belongs to the 2s orbital and ``gamma`` to the three 2p
    orbitals; either may be ``None`` when the shell is empty.
    """

    alpha: float
    beta: Optional[float] = None
    gamma: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", _check("alpha", self.alpha))
        if self.beta is not None:
            object.__setattr__(self, "beta", _check("beta", self.beta))
        if self.gamma is not None:
            object.__setattr__(self, "gamma", _check("gamma", self.gamma))

    @classmethod
    def for_atom(cls, Z: int, values) -> "Exponents":
        """Build from the leading ``n_exponents(Z)`` entries of ``values``."""
        k = n_exponents(Z)
        values = [float(v) for v in values]
        if len(values) < k:
            raise ExponentError(f"Z={Z} needs {k} exponents, got {len(values)}")
        return cls(*values[:k])

    def as_tuple(self) -> tuple:
        return tuple(v for v in (self.alpha, self.beta, self.gamma) if v is not None)

    def scaled(self, s: float) -> "Exponents":
        return Exponents(
            self.alpha * s,
            None if self.beta is None else self.beta * s,
            None if self.gamma is None else self.gamma * s,
        )

    def require(self, shell: str) -> None:
        if shell == "2s" and self.beta is None:
            raise ExponentError("2s orbital needs beta")
        if shell == "2p" and self.gamma is None:
            raise ExponentError("2p orbital needs gamma")

    def matches(self, Z: int) -> bool:
        """True when the presence pattern of beta/gamma is the one Z needs."""
        k = n_exponents(Z)
        return (self.beta is not None) == (k >= 2) and (self.gamma is not None) == (k >= 3)


def n_exponents(Z: int) -> int:
    """Number of variational exponents for atomic number ``Z`` (2..10)."""
    if not 2 <= Z <= 10:
        raise ValueError(f"Z={Z} outside 2..10")
    if Z == 2:
        return 1
    if Z <= 4:
        return 2
    return 3


def two_s_norm(alpha: float, beta: float) -> float:
    """Radial normalization constant of the orthogonalized 2s function."""
    d = alpha * alpha - alpha * beta + beta * beta
    assert d > 0.0
    return 2.0 * math.sqrt(3.0 * beta**5 / d)


def radial_part(kind: OrbitalKind, exps: Exponents) -> Callable:
    """Return the radial factor ``R(r)`` as a vectorized callable.

    ``R`` is normalized so that ``int_0^inf R(r)**2 r**2 dr == 1``.
    """
    shell = kind.shell
    exps.require(shell)
    a = exps.alpha
    if shell == "1s":
        c = 2.0 * a**1.5
        return lambda r: c * np.exp(-a * np.asarray(r, dtype=float))
    if shell == "2s":
        b = exps.beta
        n = two_s_norm(a, b)
        k = (a + b) / 3.0

        def r2s(r):
            r = np.asarray(r, dtype=float)
            return n * (1.0 - k * r) * np.exp(-b * r)

        return r2s
    g = exps.gamma
    c = 2.0 * g**2.5 / math.sqrt(3.0)
    return lambda r: c * np.asarray(r, dtype=float) * np.exp(-g * np.asarray(r, dtype=float))


def angular_part(kind: OrbitalKind, theta, phi):
    """Real angular factor, unit-normalized over the sphere."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    if kind.l == 0:
        return np.full(np.broadcast(theta, phi).shape, _INV_SQRT_4PI)[()]
    st = np.sin(theta)
    if kind is OrbitalKind.P2x:
        return _SQRT_3_OVER_4PI * st * np.cos(phi)
    if kind is OrbitalKind.P2y:
        return _SQRT_3_OVER_4PI * st * np.sin(phi)
    return _SQRT_3_OVER_4PI * np.cos(theta) * np.ones_like(phi)


def evaluate(kind: OrbitalKind, exps: Exponents, r, theta=0.0, phi=0.0):
    """Amplitude of orbital ``kind`` at the spherical point ``(r, theta, phi)``."""
    if np.any(np.asarray(r) < 0):
        raise ValueError("r must be nonnegative")
    return radial_part(kind, exps)(r) * angular_part(kind, theta, phi)
