"""Optional compiled twins of the inner loops.

numpy + numba are soft dependencies: when both import and the buffer is a
1-D numeric ndarray, the loops from ``_loops`` are run through ``numba.njit``
(compiled from the same source, cached on disk). Every other buffer type
(lists, record views, anything indexable) takes the plain-Python loops.

The compiled cycle walk does 64-bit arithmetic, so it is only selected when
``mult * modulus`` fits in int64; the Python loops have no such limit.
"""

from . import _loops

try:
    import numpy as _np
    from numba import njit as _njit

    _reverse_compiled = _njit(cache=True)(_loops.reverse_slots)
    _walk_compiled = _njit(cache=True)(_loops.cycle_walk)
    HAVE_COMPILED = True
except ImportError:  # pragma: no cover - exercised only without numpy/numba
    _np = None
    _reverse_compiled = None
    _walk_compiled = None
    HAVE_COMPILED = False

_INT64_MAX = (1 << 63) - 1


def _is_numeric_ndarray(buf):
    return (
        HAVE_COMPILED
        and isinstance(buf, _np.ndarray)
        and buf.ndim == 1
        and buf.dtype.kind in "iuf"
    )


def reverse_fn(buf):
    """Pick the reversal loop for this buffer."""
    if _is_numeric_ndarray(buf):
        return _reverse_compiled
    return _loops.reverse_slots


def walk_fn(buf, mult, modulus):
    """Pick the cycle-walk loop for this buffer and step arithmetic."""
    if _is_numeric_ndarray(buf) and mult * modulus <= _INT64_MAX:
        return _walk_compiled
    return _loops.cycle_walk


def warm_up():
    """Force JIT compilation of the int64 kernels (no-op without numba)."""
    if not HAVE_COMPILED:
        return
    probe = _np.arange(4, dtype=_np.int64)
    _reverse_compiled(probe, 0, 4)
    _walk_compiled(probe, -1, 1, 2, 3)
