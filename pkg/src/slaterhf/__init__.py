"""Single-determinant Hartree-Fock for He through Ne with Slater-type orbitals."""

__version__ = "0.1.0"

from .atoms import configuration, energy, energy_split, pair_counts, reference_table  # noqa: E402
from .basis import Exponents, OrbitalKind  # noqa: E402
from .integrals import CoulombPair, ExchangePair, core, coulomb, exchange, integral_set  # noqa: E402
from .optimize import OptimizerOptions, initial_guess, minimize, scan  # noqa: E402

__all__ = [
    "CoulombPair",
    "ExchangePair",
    "Exponents",
    "OptimizerOptions",
    "OrbitalKind",
    "configuration",
    "core",
    "coulomb",
    "energy",
    "energy_split",
    "exchange",
    "initial_guess",
    "integral_set",
    "minimize",
    "pair_counts",
    "reference_table",
    "scan",
]
