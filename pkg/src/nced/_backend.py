"""Kernel backend selection: numba-compiled hot loops with a pure-numpy fallback.

The environment variable NCED_BACKEND picks the path:

    NCED_BACKEND=numba   use numba @njit kernels (default when numba imports)
    NCED_BACKEND=numpy   run the same kernel source uncompiled on numpy

Every hot kernel is written once in nopython-compatible numpy and wrapped by
``jit`` below, so both paths execute identical arithmetic.
"""

import os
import warnings

_requested = os.environ.get("NCED_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    warnings.warn(
        f"NCED_BACKEND={_requested!r} not recognized (use 'numba' or 'numpy'); "
        "falling back to autodetection"
    )
    _requested = ""

if _requested == "numpy":
    _njit = None
else:
    try:
        from numba import njit as _njit
    except ImportError:
        if _requested == "numba":
            warnings.warn("NCED_BACKEND=numba but numba is not importable; using numpy")
        _njit = None

USE_NUMBA = _njit is not None
BACKEND = "numba" if USE_NUMBA else "numpy"


def jit(func):
    """Compile a hot kernel under the numba backend; identity under numpy."""
    if USE_NUMBA:
        return _njit(cache=True)(func)
    return func
