"""Kernel backend selection.

REEMOB_BACKEND=numba forces the jit kernels, REEMOB_BACKEND=numpy forces the
pure-numpy fallback.  Unset, numba is used when importable.  The variable is
read on every call so tests can flip backends without reimporting.
"""

import os

_cache: dict[str, object] = {}


def _load(name: str):
    if name not in _cache:
        if name == "numba":
            from . import _kernels_numba as mod
        elif name == "numpy":
            from . import _kernels_numpy as mod
        else:
            raise ValueError(f"unknown backend {name!r} (expected 'numba' or 'numpy')")
        _cache[name] = mod
    return _cache[name]


def get_backend():
    requested = os.environ.get("REEMOB_BACKEND", "").strip().lower()
    if requested:
        return _load(requested)
    try:
        return _load("numba")
    except ImportError:
        return _load("numpy")


def backend_name() -> str:
    return get_backend().NAME
