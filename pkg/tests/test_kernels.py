import json
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from latmin.kernels import _numpy

numba_mod = pytest.importorskip("latmin.kernels._numba")


@given(st.floats(-1.0, 1.0), st.floats(0.4, 3.0), st.integers(5, 80))
def test_eta_logsum_agrees(x, y, n):
    xs, ys = np.array([x, -x, 0.5 * x]), np.array([y, y + 0.3, 2 * y])
    a = np.asarray(_numpy.eta_logsum(xs, ys, n))
    b = np.asarray(numba_mod.eta_logsum(xs, ys, n))
    assert np.allclose(a, b, rtol=0, atol=1e-13)


@given(st.floats(-0.5, 0.5), st.floats(-0.5, 0.5), st.floats(-0.5, 0.5), st.floats(0.87, 3.0))
def test_green_logsum_agrees(s, t, tx, ty):
    ss, tt = np.array([s, -s]), np.array([t * ty, -t * ty])
    a = _numpy.green_logsum(ss, tt, tx, ty, 30)
    b = numba_mod.green_logsum(ss, tt, tx, ty, 30)
    assert np.allclose(a, b, rtol=0, atol=1e-13)


@pytest.mark.parametrize("flag, want", [("1", "numpy"), ("0", "numba")])
def test_backend_selection(flag, want):
    env = dict(os.environ, LATMIN_DISABLE_NUMBA=flag)
    code = "import json, latmin.kernels as k, latmin; print(json.dumps([k.BACKEND, latmin.f_b(0.3, 1.2j)]))"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    backend, value = json.loads(out.stdout)
    assert backend == want
    assert abs(value - json.loads(subprocess.run(
        [sys.executable, "-c", code], env=dict(env, LATMIN_DISABLE_NUMBA="1"),
        capture_output=True, text=True, check=True).stdout)[1]) < 1e-14


@pytest.mark.parametrize("shifted", [False, True])
@given(x=st.floats(-1.0, 1.0), y=st.floats(0.3, 3.0))
def test_grad_series_agrees(shifted, x, y):
    xs, ys = np.array([x, x + 0.25]), np.array([y, 1.5 * y])
    a = _numpy.grad_series(xs, ys, shifted, 60)
    b = numba_mod.grad_series(xs, ys, shifted, 60)
    assert np.allclose(a, b, rtol=1e-13, atol=1e-13)
