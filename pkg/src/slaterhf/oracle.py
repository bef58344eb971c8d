"""Independent numerical evaluation of the basis integrals.

Nothing here touches :mod:`slaterhf.kernel`.  Radial integrals use
composite Gauss-Legendre rules on geometrically graded panels; the
two-electron integrals split the ``(r1, r2)`` plane at ``r2 == r1`` so each
region has a smooth integrand.  Each result is computed at two rule orders
and the difference serves as the error estimate; panels are halved until
the estimate drops below tolerance.  Angular weights of the multipole
expansion are obtained by brute-force double quadrature over two spheres.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from numpy.polynomial import legendre

from .basis import Exponents, OrbitalKind, angular_part, radial_part, two_s_norm
from .integrals import CoulombPair, ExchangePair

TOL = 1e-11
ORDERS = (24, 36)
MAX_REFINE = 4


class QuadratureError(RuntimeError):
    """Raised when a quadrature fails to reach its tolerance."""


@lru_cache(maxsize=None)
def _rule(n: int):
    x, w = legendre.leggauss(n)
    return 0.5 * (x + 1.0), 0.5 * w


def _breakpoints(zmin: float, zmax: float, refine: int) -> np.ndarray:
    rcut = 40.0 / zmin
    r0 = 0.02 / zmax
    npanel = int(math.ceil(math.log(rcut / r0) / math.log(1.3))) * 2**refine
    return np.concatenate(([0.0], np.geomspace(r0, rcut, npanel)))


def _nodes(breaks: np.ndarray, n: int):
    t, w = _rule(n)
    lo = breaks[:-1, None]
    h = np.diff(breaks)[:, None]
    return lo + h * t, h * w


def _converge(compute, zmin, zmax, tol):
    """Run ``compute(breaks, order)`` at two orders, refining panels as needed."""
    for refine in range(MAX_REFINE):
        br = _breakpoints(zmin, zmax, refine)
        lo, hi = (compute(br, n) for n in ORDERS)
        err = abs(hi - lo)
        if err <= tol * max(1.0, abs(hi)):
            return hi, err
    raise QuadratureError(f"no convergence: estimate {hi!r}, error {err:.2e}")


def radial_integral(f, zmin: float, zmax: float, tol: float = TOL):
    """``int_0^inf f(r) dr`` for a decaying ``f``; returns ``(value, error)``."""

    def compute(br, n):
        x, w = _nodes(br, n)
        return float(np.sum(w * f(x)))

    return _converge(compute, zmin, zmax, tol)


def _lower_region(a, b, l, br, n):
    # int a(r1) r1^(-l-1) int_0^{r1} b(r2) r2^l dr2 dr1, inner split at panel starts
    t, wt = _rule(n)
    x, w = _nodes(br, n)
    lo = br[:-1, None]
    inner_nodes = lo[..., None] + (x - lo)[..., None] * t
    inner_w = (x - lo)[..., None] * wt
    partial = np.sum(inner_w * b(inner_nodes) * inner_nodes**l, axis=-1)
    full = np.sum(w * b(x) * x**l, axis=1)
    before = np.concatenate(([0.0], np.cumsum(full)[:-1]))[:, None]
    inner = before + partial
    return float(np.sum(w * a(x) * x ** (-l - 1.0) * inner))


def _upper_region(a, b, l, br, n):
    # int a(r1) r1^l int_{r1}^inf b(r2) r2^(-l-1) dr2 dr1
    t, wt = _rule(n)
    x, w = _nodes(br, n)
    hi = br[1:, None]
    inner_nodes = x[..., None] + (hi - x)[..., None] * t
    inner_w = (hi - x)[..., None] * wt
    partial = np.sum(inner_w * b(inner_nodes) * inner_nodes ** (-l - 1.0), axis=-1)
    full = np.sum(w * b(x) * x ** (-l - 1.0), axis=1)
    after = np.concatenate((np.cumsum(full[::-1])[::-1][1:], [0.0]))[:, None]
    inner = after + partial
    return float(np.sum(w * a(x) * x**l * inner))


def two_region(a, b, l: int, zmin: float, zmax: float, outer: str = "r1", tol: float = TOL):
    """``int int a(r1) b(r2) r_<^l / r_>^(l+1) dr1 dr2`` over both ordered regions.

    ``outer`` picks which variable carries the outer quadrature; both
    choices approximate the same integral.  Returns ``(value, error)``.
    """
    if outer == "r2":
        a, b = b, a
    elif outer != "r1":
        raise ValueError("outer must be 'r1' or 'r2'")

    def compute(br, n):
        return _lower_region(a, b, l, br, n) + _upper_region(a, b, l, br, n)

    return _converge(compute, zmin, zmax, tol)


def _radial(kind: OrbitalKind, exps: Exponents):
    return radial_part(kind, exps)


def _zrange(exps: Exponents, *kinds: OrbitalKind):
    zs = []
    for k in kinds:
        zs.append({"1s": exps.alpha, "2s": exps.beta, "2p": exps.gamma}[k.shell])
    if any(k.shell == "2s" for k in kinds):
        zs.append(exps.alpha)  # 2s node position scales with alpha + beta
    return 2.0 * min(zs), 2.0 * max(zs)


def radial_Fk(l: int, f_a, f_b, zmin: float, zmax: float, outer: str = "r1") -> float:
    """Direct radial integral ``F^l`` of two normalized radial functions."""
    val, _ = two_region(
        lambda r: f_a(r) ** 2 * r * r, lambda r: f_b(r) ** 2 * r * r, l, zmin, zmax, outer
    )
    return val


def radial_Gk(l: int, f_a, f_b, zmin: float, zmax: float, outer: str = "r1") -> float:
    """Exchange radial integral ``G^l`` of two normalized radial functions."""

    def d(r):
        return f_a(r) * f_b(r) * r * r

    val, _ = two_region(d, d, l, zmin, zmax, outer)
    return val


# representative real orbitals for each pair
_REPR = {
    "1s": OrbitalKind.S1,
    "2s": OrbitalKind.S2,
    "2p": OrbitalKind.P2z,
    "2p'": OrbitalKind.P2x,
}


def pair_orbitals(pair):
    if not isinstance(pair, (CoulombPair, ExchangePair)):
        raise TypeError(f"not an integral pair: {pair!r}")
    return tuple(_REPR[s] for s in pair.value)


@lru_cache(maxsize=None)
def _sphere(order: int = 16):
    x, w = legendre.leggauss(order)
    nphi = 2 * order
    phi = 2.0 * math.pi * np.arange(nphi) / nphi
    theta = np.arccos(x)
    th, ph = np.meshgrid(theta, phi, indexing="ij")
    wt = np.outer(w, np.full(nphi, 2.0 * math.pi / nphi))
    unit = np.stack(
        [np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)], axis=-1
    ).reshape(-1, 3)
    return th.ravel(), ph.ravel(), wt.ravel(), unit


@lru_cache(maxsize=None)
def all_angular_coefficients(pair, lmax: int = 4, order: int = 16) -> tuple:
    """Angular weights ``(l, c_l)`` for ``l = 0..lmax``, vanishing ones included.

    ``c_l`` is the double sphere integral of the two angular products
    against ``P_l(cos Theta_12)``; it multiplies ``F^l`` for a Coulomb pair
    and ``G^l`` for an exchange pair.
    """
    th, ph, wt, unit = _sphere(order)
    ka, kb = pair_orbitals(pair)
    ya = angular_part(ka, th, ph) * np.ones_like(th)
    yb = angular_part(kb, th, ph) * np.ones_like(th)
    if isinstance(pair, CoulombPair):
        d1, d2 = ya * ya, yb * yb
    else:
        d1 = d2 = ya * yb
    cos12 = np.clip(unit @ unit.T, -1.0, 1.0)
    out = []
    for l in range(lmax + 1):
        pl = legendre.legval(cos12, [0.0] * l + [1.0])
        out.append((l, float((wt * d1) @ pl @ (wt * d2))))
    return tuple(out)


def angular_coefficients(pair, lmax: int = 4, order: int = 16) -> tuple:
    """Nonvanishing angular weights; see :func:`all_angular_coefficients`."""
    return tuple(
        (l, c) for l, c in all_angular_coefficients(pair, lmax, order) if abs(c) > 1e-12
    )


def oracle_coulomb(pair: CoulombPair, exps: Exponents, lmax: int = 4) -> float:
    ka, kb = pair_orbitals(pair)
    fa, fb = _radial(ka, exps), _radial(kb, exps)
    zmin, zmax = _zrange(exps, ka, kb)
    return sum(
        c * radial_Fk(l, fa, fb, zmin, zmax) for l, c in angular_coefficients(pair, lmax)
    )


def oracle_exchange(pair: ExchangePair, exps: Exponents, lmax: int = 4) -> float:
    ka, kb = pair_orbitals(pair)
    fa, fb = _radial(ka, exps), _radial(kb, exps)
    zmin, zmax = _zrange(exps, ka, kb)
    return sum(
        c * radial_Gk(l, fa, fb, zmin, zmax) for l, c in angular_coefficients(pair, lmax)
    )


def oracle_overlap(kind_a: OrbitalKind, kind_b: OrbitalKind, exps: Exponents) -> float:
    """``<a|b>`` by radial quadrature times the exact angular overlap."""
    th, ph, wt, _ = _sphere()
    ang = float(np.sum(wt * angular_part(kind_a, th, ph) * angular_part(kind_b, th, ph)))
    if abs(ang) < 1e-14:
        return 0.0
    fa, fb = _radial(kind_a, exps), _radial(kind_b, exps)
    zmin, zmax = _zrange(exps, kind_a, kind_b)
    val, _ = radial_integral(lambda r: fa(r) * fb(r) * r * r, zmin, zmax)
    return ang * val


def _derivatives(kind: str, exps: Exponents):
    """``(R, R', R'')`` worked out by hand for each radial form."""
    if kind == "1s":
        a = exps.alpha
        c = 2.0 * a**1.5

        def rd(r):
            e = c * np.exp(-a * r)
            return e, -a * e, a * a * e

        return rd, 0
    if kind == "2s":
        a, b = exps.alpha, exps.beta
        n = two_s_norm(a, b)
        k = (a + b) / 3.0

        def rd(r):
            e = n * np.exp(-b * r)
            return (1.0 - k * r) * e, (b * k * r - k - b) * e, (2.0 * b * k + b * b - b * b * k * r) * e

        return rd, 0
    if kind == "2p":
        g = exps.gamma
        c = 2.0 * g**2.5 / math.sqrt(3.0)

        def rd(r):
            e = c * np.exp(-g * r)
            return r * e, (1.0 - g * r) * e, (g * g * r - 2.0 * g) * e

        return rd, 1
    raise ValueError(f"unknown orbital kind {kind!r}")


def oracle_core_parts(kind: str, exps: Exponents, Z: float) -> tuple:
    """Kinetic and nuclear-attraction expectation values ``(T, V)``.

    The kinetic part applies the spherical Laplacian to ``R(r) Y`` in the
    form ``R'' + 2 R'/r - l(l+1) R / r**2``.
    """
    exps.require(kind)
    rd, l = _derivatives(kind, exps)
    zs = {"1s": exps.alpha, "2s": exps.beta, "2p": exps.gamma}[kind]
    zmin, zmax = 2.0 * min(zs, exps.alpha), 2.0 * max(zs, exps.alpha)

    def kinetic(r):
        f, d1, d2 = rd(r)
        return -0.5 * f * (d2 * r * r + 2.0 * d1 * r - l * (l + 1) * f)

    def attraction(r):
        f, _, _ = rd(r)
        return -Z * f * f * r

    t, _ = radial_integral(kinetic, zmin, zmax)
    v, _ = radial_integral(attraction, zmin, zmax)
    return t, v


def oracle_core(kind: str, exps: Exponents, Z: float) -> float:
    t, v = oracle_core_parts(kind, exps, Z)
    return t + v
