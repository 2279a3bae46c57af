import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from powerslice import _pykernels, kernels

ck = pytest.importorskip("powerslice._ckernels")


@given(st.integers(0, 3000), st.integers(0, 3000), st.integers(2, 5), st.data())
def test_intersect_parity(s1, dh, k, data):
    s2 = s1 + dh
    x_stop = data.draw(st.integers(-1, s1 // 2))
    assert ck.intersect(s1, s2, k, x_stop) == _pykernels.intersect(s1, s2, k, x_stop)


def test_intersect_parity_with_power_table():
    k = 4
    powers = [x**k for x in range(300)]
    assert _pykernels.intersect(217, 267, k, 108, powers) == ck.intersect(217, 267, k, 108)


def test_intersect_overflow_guard():
    with pytest.raises(OverflowError):
        ck.intersect(10**4, 2 * 10**4, 13, 10)
    # dispatcher falls back to Python for big values
    matches, visited = kernels.intersect(10**4, 2 * 10**4, 13, 10)
    assert matches == [] and visited > 0


@given(st.integers(2, 60), st.integers(1, 5000))
def test_fermat_parity(k, n):
    assert ck.fermat_first_failure(k, n, n) == _pykernels.fermat_first_failure(k, n, n)


def test_pure_backend_selected_by_env(tmp_path):
    env = dict(os.environ, POWERSLICE_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import powerslice; print(powerslice.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
