"""Integer kernels used by the polynomial and oracle layers.

The compiled extension ``_ckernels`` is used when it was built; otherwise the
pure-Python versions from ``_pykernels`` are used.  Setting the environment
variable ``MULTIARR_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("MULTIARR_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
else:
    _impl = _pykernels

convolve = _impl.convolve
ff_gauss_jordan = _impl.ff_gauss_jordan

__all__ = ["BACKEND", "convolve", "ff_gauss_jordan"]
