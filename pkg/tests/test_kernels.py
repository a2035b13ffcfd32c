"""Compiled kernels and the pure-Python fallback must agree."""

import math

import numpy as np
import pytest

from wzsombor import _fallback, kernels

compiled = pytest.importorskip("wzsombor._kernels")


def test_backend_is_compiled():
    assert kernels.BACKEND == "compiled"


@pytest.mark.parametrize("seed", range(5))
def test_jacobi_backends_agree(seed):
    rng = np.random.default_rng(seed)
    n = 30
    a = rng.normal(size=(n, n))
    a = a + a.T
    fro = np.linalg.norm(a)
    ev_c, _, ok_c = compiled.jacobi_eigenvalues(a.copy(), 1e-12 * fro, 1e-13 * fro / n, 100)
    ev_p, _, ok_p = _fallback.jacobi_eigenvalues(a.copy(), 1e-12 * fro, 1e-13 * fro / n, 100)
    assert ok_c and ok_p
    np.testing.assert_allclose(np.sort(ev_c), np.sort(ev_p), atol=1e-10 * fro)
    np.testing.assert_allclose(np.sort(ev_c), np.linalg.eigvalsh(a), atol=1e-10 * fro)


@pytest.mark.parametrize("n", [12, 30, 36, 49, 60, 97, 100])
def test_oracle_backends_agree(n):
    xs = np.array([x for x in range(1, n) if math.gcd(x, n) > 1], dtype=np.int64)
    gcds = np.array([math.gcd(int(x), n) for x in xs], dtype=np.int64)
    reduced = compiled.oracle_adjacency_reduced(n, gcds)
    assert np.array_equal(reduced, _fallback.oracle_adjacency_reduced(n, gcds))
    assert np.array_equal(reduced, compiled.oracle_adjacency_literal(n, xs))
    assert np.array_equal(reduced, _fallback.oracle_adjacency_literal(n, xs))


def test_empty_inputs():
    empty = np.zeros((0, 0))
    for impl in (compiled, _fallback):
        ev, sweeps, ok = impl.jacobi_eigenvalues(empty.copy(), 0.0, 0.0, 10)
        assert ev.shape == (0,) and ok


def test_fallback_selected_by_env():
    import json
    import os
    import subprocess
    import sys

    code = "import wzsombor, json; from wzsombor.analysis import analyze; print(wzsombor.BACKEND); print(analyze(18).to_json())"
    env = dict(os.environ, WZSOMBOR_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout
    backend, _, payload = out.partition("\n")
    assert backend == "python"
    slow = json.loads(payload)
    from wzsombor.analysis import analyze

    fast = analyze(18).to_dict()
    assert slow["num_edges"] == fast["num_edges"] and slow["oracle_match"] is True
    np.testing.assert_allclose(
        [v for v, _ in slow["spectrum"]["pairs"]], [v for v, _ in fast["spectrum"]["pairs"]], atol=1e-9
    )
