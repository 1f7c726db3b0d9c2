"""Hot graph kernels, compiled when available.

The Cython build ``_ckernels`` is used if it imports; otherwise the
pure-Python ``_pykernels`` take over. Setting ``DIVGRAPH_PURE_PYTHON=1``
forces the fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("DIVGRAPH_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

distance_matrix = _impl.distance_matrix
component_labels = _impl.component_labels
shortest_cycle = _impl.shortest_cycle
shortest_cycle_at_least = _impl.shortest_cycle_at_least
find_embedding = _impl.find_embedding


def backends():
    """Available kernel modules keyed by name (for tests and benchmarks)."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels

        found["cython"] = _ckernels
    except ImportError:
        pass
    return found
