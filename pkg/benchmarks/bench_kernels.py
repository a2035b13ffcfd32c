"""Compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--orders 50 100 200] [--moduli 60 100 210]
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from wzsombor import _fallback
from wzsombor.spectral import sombor_matrix
from wzsombor.structure import build_compressed, expand

try:
    from wzsombor import _kernels
except ImportError:  # pragma: no cover
    _kernels = None


def _time(fn, *args, repeat=3):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_jacobi(moduli):
    print(f"{'jacobi':<10}{'n':>6}{'N':>6}{'compiled s':>14}{'python s':>14}{'speedup':>10}")
    for n in moduli:
        s = sombor_matrix(expand(build_compressed(n))).entries
        fro = np.linalg.norm(s)
        args = (fro * 1e-12, fro * 1e-13 / len(s), 100)
        tc = _time(lambda: _kernels.jacobi_eigenvalues(s.copy(), *args))
        tp = _time(lambda: _fallback.jacobi_eigenvalues(s.copy(), *args), repeat=1)
        print(f"{'':<10}{n:>6}{len(s):>6}{tc:>14.4f}{tp:>14.4f}{tp / tc:>10.1f}")


def bench_oracle(moduli):
    print(f"{'oracle':<10}{'n':>6}{'N':>6}{'compiled s':>14}{'python s':>14}{'speedup':>10}")
    for n in moduli:
        xs = np.array([x for x in range(1, n) if math.gcd(x, n) > 1], dtype=np.int64)
        gcds = np.array([math.gcd(int(x), n) for x in xs], dtype=np.int64)
        tc = _time(_kernels.oracle_adjacency_reduced, n, gcds)
        tp = _time(_fallback.oracle_adjacency_reduced, n, gcds, repeat=1)
        print(f"{'':<10}{n:>6}{len(xs):>6}{tc:>14.4f}{tp:>14.4f}{tp / tc:>10.1f}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--jacobi", type=int, nargs="+", default=[24, 60, 120, 240])
    ap.add_argument("--oracle", type=int, nargs="+", default=[60, 120, 210, 300])
    args = ap.parse_args()
    if _kernels is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    bench_jacobi(args.jacobi)
    bench_oracle(args.oracle)


if __name__ == "__main__":
    main()
