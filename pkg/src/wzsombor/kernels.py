"""Backend selection for the hot loops.

The compiled extension is used when importable; otherwise, or when the
environment variable ``WZSOMBOR_PURE_PYTHON`` is ``1``, the numpy fallback.
"""

from __future__ import annotations

import os

from . import _fallback

BACKEND = "python"
_impl = _fallback

if os.environ.get("WZSOMBOR_PURE_PYTHON") != "1":
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:  # pragma: no cover - depends on build
        _impl = _fallback

jacobi_eigenvalues = _impl.jacobi_eigenvalues
oracle_adjacency_reduced = _impl.oracle_adjacency_reduced
oracle_adjacency_literal = _impl.oracle_adjacency_literal

__all__ = [
    "BACKEND",
    "jacobi_eigenvalues",
    "oracle_adjacency_literal",
    "oracle_adjacency_reduced",
]
