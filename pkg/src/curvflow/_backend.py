"""Kernel backend selection.

The env var ``CURVFLOW_BACKEND`` picks the implementation of the hot
curvature kernels: ``numba`` (default when importable) or ``numpy``.
Tests and benchmarks can switch at runtime with :func:`set_backend`.
"""

from __future__ import annotations

import os

from . import _kernels_numpy

ENV_VAR = "CURVFLOW_BACKEND"

_active_name: str | None = None
_active_module = None


def _numba_module():
    from . import _kernels_numba

    return _kernels_numba


def _resolve(name: str):
    if name == "numpy":
        return _kernels_numpy
    if name == "numba":
        try:
            return _numba_module()
        except ImportError as exc:
            raise RuntimeError(
                "CURVFLOW_BACKEND=numba requested but numba is not importable"
            ) from exc
    raise ValueError(f"unknown backend {name!r}; use 'numba' or 'numpy'")


def set_backend(name: str) -> None:
    """Force a backend for the rest of the process."""
    global _active_name, _active_module
    _active_module = _resolve(name)
    _active_name = name


def active_backend() -> str:
    """Name of the backend in use ('numba' or 'numpy')."""
    kernels()
    return _active_name


def kernels():
    """The active kernel module (lazily chosen on first use)."""
    global _active_name, _active_module
    if _active_module is None:
        requested = os.environ.get(ENV_VAR)
        if requested:
            set_backend(requested)
        else:
            try:
                _active_module = _numba_module()
                _active_name = "numba"
            except ImportError:
                _active_module = _kernels_numpy
                _active_name = "numpy"
    return _active_module
