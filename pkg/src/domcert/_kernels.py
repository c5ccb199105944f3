"""Kernel selection: compiled Cython core when importable, pure Python otherwise.

Set ``DOMCERT_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _conekernel_py, _lrkernel_py

lr = _lrkernel_py
cone = _conekernel_py
BACKEND = "python"

if not os.environ.get("DOMCERT_PURE_PYTHON"):
    try:
        from . import _conekernel, _lrkernel
    except ImportError:
        pass
    else:
        lr, cone, BACKEND = _lrkernel, _conekernel, "cython"

__all__ = ["BACKEND", "cone", "lr"]
