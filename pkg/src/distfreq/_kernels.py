"""Kernel backend selection: compiled extension when built, pure Python otherwise.

Set the environment variable DISTFREQ_PURE to any non-empty value to force
the pure-Python kernels; the benchmark and the backend-agreement tests use
this to compare the two implementations.
"""

from __future__ import annotations

import os

from distfreq import _kernels_py

SEARCH_FOUND = _kernels_py.SEARCH_FOUND
SEARCH_EXHAUSTED = _kernels_py.SEARCH_EXHAUSTED
SEARCH_ABORTED = _kernels_py.SEARCH_ABORTED

edge_endpoints = _kernels_py.edge_endpoints

if os.environ.get("DISTFREQ_PURE"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from distfreq import _speedups as _impl  # type: ignore[assignment]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

alpha_for_mask = _impl.alpha_for_mask
search_exact = _impl.search_exact
census = _impl.census
