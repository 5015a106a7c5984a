"""Selects the term-map kernels at import time.

The compiled extension (_termops) is preferred when it built; otherwise
the pure-Python twin is used.  Set GVAND_PURE_PYTHON=1 to force the
pure path, which the kernel benchmark uses for side-by-side timing.
"""

import os

if os.environ.get("GVAND_PURE_PYTHON"):
    from gvand import _termops_py as _impl
else:
    try:
        from gvand import _termops as _impl  # type: ignore[attr-defined]
    except ImportError:
        from gvand import _termops_py as _impl

BACKEND = _impl.BACKEND
add_terms = _impl.add_terms
addmul_terms = _impl.addmul_terms
mul_terms = _impl.mul_terms
