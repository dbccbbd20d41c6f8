"""Optional numba acceleration.

Hot kernels are decorated with :func:`njit`. Setting ``STABKIT_DISABLE_NUMBA=1``
(or running without numba installed) leaves them as plain Python/numpy
functions, which is slower but runs the same source.
"""

import os

_FLAG = os.environ.get("STABKIT_DISABLE_NUMBA", "").strip().lower()

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

NUMBA_ENABLED = numba is not None and _FLAG not in ("1", "true", "yes", "on")


def njit(*args, **kwargs):
    """``numba.njit`` when acceleration is enabled, identity otherwise."""
    if not NUMBA_ENABLED:
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f
    kwargs.setdefault("cache", True)
    return numba.njit(*args, **kwargs)


if NUMBA_ENABLED:
    prange = numba.prange
    if "NUMBA_THREADING_LAYER" not in os.environ:
        numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]
else:
    prange = range


def python_version_of(func):
    """Return the uncompiled Python function behind a kernel."""
    return getattr(func, "py_func", func)
