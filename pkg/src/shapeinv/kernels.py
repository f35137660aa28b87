"""Backend selection for the sweep kernel.

The compiled extension is used when it imports; setting
``SHAPEINV_PURE_PYTHON=1`` forces the pure-Python fallback.
"""
from __future__ import annotations

import os

from . import _sweep_py

try:
    from . import _sweep as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = ("compiled", "python") if _compiled is not None else ("python",)
DEFAULT_BACKEND = "python" if os.environ.get("SHAPEINV_PURE_PYTHON") or _compiled is None else "compiled"


def sweep_range(n: int, start: int, count: int, backend: str | None = None) -> dict:
    backend = backend or DEFAULT_BACKEND
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled sweep kernel is not available")
        return _compiled.sweep_range(n, start, count)
    if backend == "python":
        return _sweep_py.sweep_range(n, start, count)
    raise ValueError(f"unknown backend {backend!r}")
