"""Backend selection for the bit-packed GF(2) elimination kernel.

Imports the compiled Cython kernel when the extension was built, otherwise
the pure-Python fallback.  Both expose the same ``echelon_bits`` contract;
``BACKEND`` records which one is active.
"""

from __future__ import annotations

from lightsout import _gf2pure

try:
    from lightsout import _gf2fast as _impl

    BACKEND = "compiled"
except ImportError:
    _impl = _gf2pure
    BACKEND = "pure"

echelon_bits = _impl.echelon_bits


def available_backends() -> dict:
    """Map backend name -> echelon_bits implementation, for tests and benchmarks."""
    out = {"pure": _gf2pure.echelon_bits}
    if BACKEND == "compiled":
        out["compiled"] = _impl.echelon_bits
    return out
