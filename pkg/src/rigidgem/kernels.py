"""Kernel selection.

The compiled extension ``rigidgem._ckernels`` is used when it imports;
otherwise the pure-Python module is used.  Setting ``RIGIDGEM_PURE=1`` in the
environment forces the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("RIGIDGEM_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels
    else:
        BACKEND = "cython"
else:
    _impl = _pykernels

residue_labels = _impl.residue_labels
canonical_sequence = _impl.canonical_sequence

__all__ = ["BACKEND", "residue_labels", "canonical_sequence"]
