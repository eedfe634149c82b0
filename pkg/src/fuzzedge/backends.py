"""Selection of the streaming kernel implementation.

The compiled extension is used when it imported cleanly; otherwise the
pure-Python kernels take over. Setting the environment variable
``FUZZEDGE_PURE=1`` before import forces the pure path (useful for the
benchmark and for debugging).
"""

from __future__ import annotations

import os

from . import _kernels_py

_native = None
if os.environ.get("FUZZEDGE_PURE", "0") in ("", "0"):
    try:
        from . import _kernels as _native  # type: ignore[attr-defined]
    except ImportError:
        _native = None

BACKEND = "cython" if _native is not None else "python"

_impl = _native if _native is not None else _kernels_py

stream_edge_map_direct = _impl.stream_edge_map_direct
stream_edge_map_incremental = _impl.stream_edge_map_incremental


def available_backends() -> tuple[str, ...]:
    return ("cython", "python") if _native is not None else ("python",)


def get_backend(name: str):
    """The kernel module for an explicit backend name ('cython' or 'python')."""
    if name == "python":
        return _kernels_py
    if name == "cython":
        if _native is None:
            raise ValueError("compiled backend is not available in this install")
        return _native
    raise ValueError(f"unknown backend {name!r}")
