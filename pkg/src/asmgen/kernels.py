"""Select the enumeration kernel at import time.

The compiled extension is used when it was built; otherwise (or when the
environment variable ASMGEN_PURE_PYTHON is set to a non-empty value) the
pure-Python module is used.  Both expose count_asms, fold_boundary and
fold_full with identical results.
"""

from __future__ import annotations

import os

from . import _kernel_py
from ._kernel_py import iter_matrices, transition_table

BACKEND = "python"
_impl = _kernel_py

if not os.environ.get("ASMGEN_PURE_PYTHON"):
    try:
        from . import _ckernel as _compiled
    except ImportError:  # extension not built
        _compiled = None
    if _compiled is not None:
        _impl = _compiled
        BACKEND = "cython"

count_asms = _impl.count_asms
fold_boundary = _impl.fold_boundary
fold_full = _impl.fold_full

__all__ = ["BACKEND", "count_asms", "fold_boundary", "fold_full", "iter_matrices",
           "transition_table"]
