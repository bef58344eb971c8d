"""Exponent optimization for the atomic energy functionals.

The search runs a Nelder-Mead simplex on the logarithms of the exponents,
so every trial point is strictly positive.  The best point of the initial
run and of a few multiplicatively perturbed restarts is returned, then
checked for stationarity with central finite differences.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .atoms import DEFAULT_P_SHELL, energy, energy_function, energy_split
from .basis import MAX_EXPONENT, ExponentError, Exponents, n_exponents


@dataclass(frozen=True)
class OptimizerOptions:
    energy_tolerance: float = 1e-10
    parameter_tolerance: float = 1e-8
    max_evaluations: int = 10000
    restarts: int = 3
    seed: int = 42
    p_shell: str = DEFAULT_P_SHELL

    def __post_init__(self):
        if self.energy_tolerance <= 0 or self.parameter_tolerance <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_evaluations < 1 or self.restarts < 0:
            raise ValueError("max_evaluations must be >= 1 and restarts >= 0")


@dataclass
class SimplexResult:
    x: np.ndarray
    fun: float
    evaluations: int
    iterations: int
    converged: bool
    history: list = field(default_factory=list)  # best value after each iteration


def nelder_mead(
    func: Callable,
    x0: Sequence[float],
    step: float = 0.05,
    ftol: float = 1e-10,
    xtol: float = 1e-8,
    max_evaluations: int = 10000,
) -> SimplexResult:
    """Minimize ``func`` with the Nelder-Mead simplex method.

    Standard coefficients (reflection 1, expansion 2, contraction 1/2,
    shrink 1/2).  Converged once the spread of simplex values is below
    ``ftol`` and every vertex is within ``xtol`` of the best one.  If the
    values flatten to rounding noise first, the run also counts as
    converged, because no further progress is measurable.
    """
    x0 = np.asarray(x0, dtype=float)
    n = x0.size
    simplex = np.empty((n + 1, n))
    simplex[0] = x0
    for i in range(n):
        v = x0.copy()
        v[i] += step
        simplex[i + 1] = v
    fvals = np.array([func(v) for v in simplex])
    nfev = n + 1
    history = []
    it = 0
    converged = False
    flat = 0
    while nfev < max_evaluations:
        order = np.argsort(fvals, kind="stable")
        simplex, fvals = simplex[order], fvals[order]
        history.append(float(fvals[0]))
        spread = fvals[-1] - fvals[0]
        size = np.max(np.abs(simplex[1:] - simplex[0]))
        if spread <= ftol and size <= xtol:
            converged = True
            break
        noise = 8.0 * np.finfo(float).eps * max(1.0, abs(fvals[0]))
        flat = flat + 1 if spread <= noise else 0
        if flat > 10 * n and spread <= ftol:
            converged = True
            break
        it += 1

        centroid = simplex[:-1].mean(axis=0)
        worst = simplex[-1]
        xr = centroid + (centroid - worst)
        fr = func(xr)
        nfev += 1
        if fr < fvals[0]:
            xe = centroid + 2.0 * (centroid - worst)
            fe = func(xe)
            nfev += 1
            if fe < fr:
                simplex[-1], fvals[-1] = xe, fe
            else:
                simplex[-1], fvals[-1] = xr, fr
            continue
        if fr < fvals[-2]:
            simplex[-1], fvals[-1] = xr, fr
            continue
        if fr < fvals[-1]:
            xc = centroid + 0.5 * (xr - centroid)
            fc = func(xc)
            nfev += 1
            if fc <= fr:
                simplex[-1], fvals[-1] = xc, fc
                continue
        else:
            xc = centroid + 0.5 * (worst - centroid)
            fc = func(xc)
            nfev += 1
            if fc < fvals[-1]:
                simplex[-1], fvals[-1] = xc, fc
                continue
        best = simplex[0]
        for i in range(1, n + 1):
            simplex[i] = best + 0.5 * (simplex[i] - best)
            fvals[i] = func(simplex[i])
        nfev += n
    i = int(np.argmin(fvals))
    return SimplexResult(simplex[i].copy(), float(fvals[i]), nfev, it, converged, history)


@dataclass
class AtomResult:
    Z: int
    exponents: Exponents
    energy: float
    converged: bool
    evaluations: int
    kinetic: float = math.nan
    potential: float = math.nan
    gradient: tuple = ()
    stationary: bool = False
    restart_spread: float = 0.0
    restarts_agree: bool = True
    initial_energy: float = math.nan
    wall_time: float = field(default=0.0, compare=False)

    @property
    def virial_ratio(self) -> float:
        """``-V / T``; equals 2 at a scaling-stationary point."""
        return -self.potential / self.kinetic


def initial_guess(Z: int) -> Exponents:
    """Screening-rule starting point for atom ``Z``."""
    k = n_exponents(Z)
    alpha = Z - 0.3
    if k == 1:
        return Exponents(alpha)
    beta = max((Z - 2 - 0.85) / 2.0, 0.5)
    return Exponents(alpha, beta, beta if k == 3 else None)


def _objective(Z: int, p_shell: str):
    f = energy_function(Z, p_shell)
    log_max = math.log(MAX_EXPONENT)

    def g(y):
        if max(y) > log_max:
            return math.inf
        return f(np.exp(y).tolist())

    return g


def finite_gradient(Z: int, exps: Exponents, step: float = 1e-5, p_shell: str = DEFAULT_P_SHELL) -> tuple:
    """Central-difference ``dE/dx_i`` with relative step ``step``."""
    f = energy_function(Z, p_shell)
    x = list(exps.as_tuple())
    grad = []
    for i, xi in enumerate(x):
        h = step * xi
        up, dn = list(x), list(x)
        up[i] += h
        dn[i] -= h
        grad.append((f(up) - f(dn)) / (2.0 * h))
    return tuple(grad)


def minimize(Z: int, guess: Optional[Exponents] = None, opts: Optional[OptimizerOptions] = None) -> AtomResult:
    """Optimize the exponents of atom ``Z``.

    Returns the lowest-energy result over the initial run and
    ``opts.restarts`` perturbed restarts.  Restart ``k`` scales the guess by
    factors drawn uniformly from ``[0.7, 1.4]`` with a seeded generator.
    A run that exhausts ``max_evaluations`` is reported with
    ``converged=False`` and its best point so far.
    """
    opts = opts or OptimizerOptions()
    guess = guess or initial_guess(Z)
    if not guess.matches(Z):
        raise ExponentError(f"guess {guess} does not fit Z={Z}")
    t0 = time.perf_counter()
    obj = _objective(Z, opts.p_shell)
    y0 = np.log(guess.as_tuple())
    rng = np.random.default_rng(opts.seed)
    starts = [y0] + [
        y0 + np.log(rng.uniform(0.7, 1.4, size=y0.size)) for _ in range(opts.restarts)
    ]
    runs = []
    for y in starts:
        r = nelder_mead(
            obj,
            y,
            ftol=opts.energy_tolerance,
            xtol=opts.parameter_tolerance,
            max_evaluations=opts.max_evaluations,
        )
        runs.append(r)
    best = min(runs, key=lambda r: r.fun)
    xs = np.array([np.exp(r.x) for r in runs])
    xb = np.exp(best.x)
    spread = float(np.max(np.abs(xs - xb) / xb))
    exps = Exponents.for_atom(Z, xb)
    T, V = energy_split(Z, exps, opts.p_shell)
    grad = finite_gradient(Z, exps, p_shell=opts.p_shell)
    # scaling-invariant measure: |x_i dE/dx_i| relative to |E|
    stationary = bool(max(abs(g * x) for g, x in zip(grad, xb)) <= 1e-6 * max(1.0, abs(best.fun)))
    return AtomResult(
        Z=Z,
        exponents=exps,
        energy=T + V,
        converged=all(r.converged for r in runs),
        evaluations=sum(r.evaluations for r in runs),
        kinetic=T,
        potential=V,
        gradient=grad,
        stationary=stationary,
        restart_spread=spread,
        restarts_agree=bool(spread <= 1e-4),
        initial_energy=obj(y0),
        wall_time=time.perf_counter() - t0,
    )


def scan(Z: int, grid: Sequence[Exponents], p_shell: str = DEFAULT_P_SHELL) -> list:
    """Energy at each grid point, in order, as ``(exponents, energy)`` pairs."""
    return [(e, energy(Z, e, p_shell)) for e in grid]
