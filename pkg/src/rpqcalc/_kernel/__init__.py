"""Kernel backend selection.

The compiled Cython backend is preferred when present; the pure-Python
fallback is used otherwise.  Set ``RPQCALC_PURE=1`` to force the
fallback (used by the benchmark and for debugging).
"""

import os

from . import _fallback

if os.environ.get("RPQCALC_PURE"):
    _impl = _fallback
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _fallback

BACKEND = _impl.BACKEND
power_table = _impl.power_table
elementwise_mulmod = _impl.elementwise_mulmod
weighted_sum = _impl.weighted_sum
pow_weighted_sum = _impl.pow_weighted_sum
alt_sum = _impl.alt_sum

__all__ = [
    "BACKEND", "power_table", "elementwise_mulmod", "weighted_sum",
    "pow_weighted_sum", "alt_sum",
]
