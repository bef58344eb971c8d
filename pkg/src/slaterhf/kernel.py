"""Backend selection for the closed-form integral kernel.

The compiled extension ``_ckernel`` is used when it has been built;
otherwise the pure-Python ``_pykernel`` is imported.  Both expose
``pair_integral`` and ``slater_values`` with identical results.
"""

from __future__ import annotations

from . import _pykernel

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

_impl = _pykernel if _ckernel is None else _ckernel
BACKEND = "python" if _ckernel is None else "cython"

pair_integral = _impl.pair_integral
slater_values = _impl.slater_values

# positions in the tuple returned by slater_values
T1S, U1S, T2S, U2S, T2P, U2P = range(6)
F0_1S1S, F0_2S2S, F0_1S2S, F0_1S2P, F0_2S2P, F0_2P2P, F2_2P2P = range(6, 13)
G0_1S2S, G1_1S2P, G1_2S2P = range(13, 16)
N_VALUES = 16


def backends() -> dict:
    """Map of available backend name to module."""
    out = {"python": _pykernel}
    if _ckernel is not None:
        out["cython"] = _ckernel
    return out


def set_backend(name: str) -> str:
    """Rebind the module-level kernel functions; returns the previous backend name.

    Affects energy functions created after the call.
    """
    global BACKEND, pair_integral, slater_values
    available = backends()
    if name not in available:
        raise ValueError(f"backend {name!r} not available; have {sorted(available)}")
    previous = BACKEND
    mod = available[name]
    BACKEND, pair_integral, slater_values = name, mod.pair_integral, mod.slater_values
    return previous
