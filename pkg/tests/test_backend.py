"""Backend plumbing: the compiled kernels and their uncompiled source agree."""

import os
import subprocess
import sys

import numpy as np

import nced
from nced import algebra as alg
from nced import constitutive as ct
from nced import duality as du


def py_func(kernel):
    """The uncompiled source of a kernel (itself, under the numpy backend)."""
    return getattr(kernel, "py_func", kernel)


def test_backend_flag_is_reported():
    assert nced.BACKEND in ("numba", "numpy")
    assert nced.USE_NUMBA == (nced.BACKEND == "numba")


# compiled code may fuse or reorder individual float ops, so agreement is
# to a couple of ulps, not bit-exact

def test_mul_matches_source():
    rng = np.random.default_rng(0)
    for _ in range(50):
        q = rng.normal(size=4) + 1j * rng.normal(size=4)
        p = rng.normal(size=4) + 1j * rng.normal(size=4)
        assert np.max(np.abs(alg.mul(q, p) - py_func(alg.mul)(q, p))) <= 1e-14


def test_constitutive_kernels_match_source():
    rng = np.random.default_rng(1)
    f = rng.normal(size=3) + 1j * rng.normal(size=3)
    k = rng.normal(size=3) + 1j * rng.normal(size=3)
    assert np.max(np.abs(ct.h_from_f(f, k) - py_func(ct.h_from_f)(f, k))) <= 1e-14
    assert np.max(np.abs(ct.f_from_h(f, k) - py_func(ct.f_from_h)(f, k))) <= 1e-14


def test_gr_residual_matches_source():
    rng = np.random.default_rng(2)
    G = rng.normal(size=3) + 1j * rng.normal(size=3)
    R = rng.normal(size=3) + 1j * rng.normal(size=3)
    k = rng.normal(size=3) + 1j * rng.normal(size=3)
    assert abs(du._gr_residual(G, R, k) - py_func(du._gr_residual)(G, R, k)) <= 1e-14


def test_numpy_backend_subprocess_agrees():
    """Force the fallback in a child process and compare one scan value."""
    script = (
        "import numpy as np\n"
        "import nced\n"
        "from nced import duality as du\n"
        "G = np.array([1.0 + 0.5j, -0.3, 0.2j])\n"
        "R = np.array([0.1, 0.2 - 0.1j, 0.0])\n"
        "K = np.array([0.3, 0.0, 0.4j])\n"
        "chis = np.linspace(0.0, 2.0, 11)\n"
        "out = du._scan_kernel(G, R, K, chis)\n"
        "print(nced.BACKEND)\n"
        "print(' '.join(repr(float(x)) for x in out))\n"
    )
    env = dict(os.environ, NCED_BACKEND="numpy")
    proc = subprocess.run(
        [sys.executable, "-c", script], capture_output=True, text=True,
        env=env, timeout=300,
    )
    assert proc.returncode == 0, proc.stderr
    lines = proc.stdout.strip().splitlines()
    assert lines[0] == "numpy"
    child = np.array([float(x) for x in lines[1].split()])
    G = np.array([1.0 + 0.5j, -0.3, 0.2j])
    R = np.array([0.1, 0.2 - 0.1j, 0.0])
    K = np.array([0.3, 0.0, 0.4j])
    here = du._scan_kernel(G, R, K, np.linspace(0.0, 2.0, 11))
    assert np.max(np.abs(here - child)) <= 1e-14
