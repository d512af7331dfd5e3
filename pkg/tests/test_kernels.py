import os
import subprocess
import sys

import pytest
from hypothesis import given

from weldkit import _kernels
from weldkit._kernels import _pykernels

from .oracles import brute_canonical, diagrams

try:
    from weldkit._kernels import _ckernels
except ImportError:  # extension not built
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def test_backend_selected():
    assert _kernels.BACKEND == ("cython" if _ckernels is not None else "python")


@given(diagrams(max_crossings=10))
def test_python_canonical_is_min_rotation(d):
    got = _pykernels.canonical_form(d.tokens)
    want = tuple((lab << 2) | (role << 1) | s for lab, role, s in brute_canonical(d))
    assert got == want


@needs_ext
@given(diagrams(max_crossings=12))
def test_backends_agree(d):
    assert _ckernels.canonical_form(d.tokens) == _pykernels.canonical_form(d.tokens)
    assert list(_ckernels.warping_profile(d.tokens)) == list(_pykernels.warping_profile(d.tokens))


@needs_ext
def test_backends_agree_on_empty():
    assert _ckernels.canonical_form(()) == _pykernels.canonical_form(()) == ()
    assert list(_ckernels.warping_profile(())) == list(_pykernels.warping_profile(()))


def test_pure_python_switch():
    env = dict(os.environ, WELDKIT_PURE_PYTHON="1")
    proc = subprocess.run(
        [sys.executable, "-c", "import weldkit; print(weldkit.BACKEND)"],
        check=False,
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.stdout.strip() == "python"
