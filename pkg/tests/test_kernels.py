import os
import subprocess
import sys

import pytest

from asmgen import _kernel_py, kernels

try:
    from asmgen import _ckernel
except ImportError:  # extension not built
    _ckernel = None

needs_compiled = pytest.mark.skipif(_ckernel is None, reason="compiled kernel not built")


@needs_compiled
@pytest.mark.parametrize("n", range(1, 7))
def test_compiled_and_pure_kernels_agree(n):
    assert _ckernel.count_asms(n) == _kernel_py.count_asms(n)
    assert _ckernel.fold_boundary(n) == _kernel_py.fold_boundary(n)
    if n <= 5:
        assert _ckernel.fold_full(n) == _kernel_py.fold_full(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_histograms_sum_to_the_count(n):
    total = _kernel_py.count_asms(n)
    assert sum(kernels.fold_boundary(n).values()) == total
    assert sum(kernels.fold_full(n).values()) == total
    assert sum(1 for _ in kernels.iter_matrices(n)) == total


def test_environment_forces_pure_python():
    env = dict(os.environ, ASMGEN_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from asmgen import kernels; print(kernels.BACKEND)"],
                         capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "python"


@needs_compiled
def test_compiled_backend_selected_by_default():
    if os.environ.get("ASMGEN_PURE_PYTHON"):
        pytest.skip("pure-Python backend forced")
    assert kernels.BACKEND == "cython"
