"""Hot numeric kernels with a selectable backend.

``ROT345_BACKEND=numba`` (default when numba imports) compiles the looped
kernels with ``numba.njit``; ``ROT345_BACKEND=numpy`` uses the vectorised
fallback. Both modules expose the same functions; :func:`get_backend`
returns either one explicitly, e.g. for benchmarks.
"""

import importlib
import logging
import os

log = logging.getLogger(__name__)

BACKENDS = ("numba", "numpy")


def get_backend(name):
    if name not in BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r}; expected one of {BACKENDS}")
    return importlib.import_module(f"{__name__}._{name}")


def _select():
    requested = os.environ.get("ROT345_BACKEND", "numba").strip().lower() or "numba"
    if requested == "numba":
        try:
            return "numba", get_backend("numba")
        except ImportError:
            log.info("numba not importable; using numpy kernels")
            return "numpy", get_backend("numpy")
    return requested, get_backend(requested)


BACKEND, K = _select()
