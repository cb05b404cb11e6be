"""Hot flag-graph kernels with a compiled core and a pure-Python fallback.

The compiled extension ``_ckernels`` is used when it imports cleanly; set
``ZIGZAG_PURE=1`` in the environment to force the fallback.  ``BACKEND``
names the implementation in use.
"""
import os

from . import _pykernels

if os.environ.get("ZIGZAG_PURE", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

perm_cycles = _impl.perm_cycles
residue_labels = _impl.residue_labels
bfs_parity = _impl.bfs_parity
extend_map = _impl.extend_map

__all__ = ["BACKEND", "perm_cycles", "residue_labels", "bfs_parity", "extend_map"]
