"""Hot kernels: compiled extension when built, pure Python otherwise.

Set ``WELDKIT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
canonical_form = _pykernels.canonical_form
warping_profile = _pykernels.warping_profile

if not os.environ.get("WELDKIT_PURE_PYTHON"):
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        canonical_form = _ckernels.canonical_form
        warping_profile = _ckernels.warping_profile

__all__ = ["BACKEND", "canonical_form", "warping_profile"]
