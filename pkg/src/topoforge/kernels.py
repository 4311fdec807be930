"""Kernel backend selection.

The compiled module is used when it imports; setting
``TOPOFORGE_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

from __future__ import annotations

import os

from topoforge import _pykernels

if os.environ.get("TOPOFORGE_PURE_PYTHON") == "1":
    _impl = _pykernels
else:
    try:
        from topoforge import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "cython"

is_topology = _impl.is_topology
interior_table = _impl.interior_table
closure_table = _impl.closure_table
star_members = _impl.star_members
open_core_table = _impl.open_core_table
avoid_closure_table = _impl.avoid_closure_table
is_monotone = _impl.is_monotone
distributes = _impl.distributes
preserves_unions = _impl.preserves_unions
preimage_table = _impl.preimage_table
union_closure = _impl.union_closure


def enumerate_topologies(n: int) -> list[int]:
    # compiled path packs a family into 64 bits, which covers n <= 4
    if n <= 4:
        return _impl.enumerate_topologies(n)
    return _pykernels.enumerate_topologies(n)


def backends() -> dict:
    """Both backends keyed by name; the compiled one only if it built."""
    found = {"python": _pykernels}
    try:
        from topoforge import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
