"""Optional numba acceleration.

Kernels are written once, in a numba-compatible subset of Python over numpy
arrays. When numba is importable and ``HONEYCOMB_DISABLE_NUMBA`` is unset (or
``0``), they are compiled with ``@njit``; otherwise the identical source runs
as plain Python.
"""

import os

_DISABLED = os.environ.get("HONEYCOMB_DISABLE_NUMBA", "0").lower() not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit as _numba_njit

    NUMBA_ENABLED = True
except ImportError:
    _numba_njit = None
    NUMBA_ENABLED = False


def njit(func):
    """Compile ``func`` with numba when enabled, else return it unchanged.

    ``nogil`` lets the thread pool in :mod:`honeycomb.search` run kernels
    concurrently.
    """
    if _numba_njit is None:
        return func
    return _numba_njit(cache=True, nogil=True)(func)


def python_impl(func):
    """The uncompiled Python body of a kernel (itself if numba is off)."""
    return getattr(func, "py_func", func)
