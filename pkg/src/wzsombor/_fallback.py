"""Pure-Python/numpy versions of the compiled kernels in ``_kernels.pyx``.

Same signatures and results; used when the extension is missing or when
``WZSOMBOR_PURE_PYTHON=1`` is set.
"""

from __future__ import annotations

import math

import numpy as np


def jacobi_eigenvalues(a: np.ndarray, off_tol: float, skip_tol: float, max_sweeps: int):
    n = a.shape[0]
    sweep = 0
    converged = False
    while True:
        off = math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))
        if off <= off_tol:
            converged = True
            break
        if sweep >= max_sweeps:
            break
        sweep += 1
        thresh = skip_tol
        if sweep <= 3:
            thresh = max(0.2 * off / (n * n), skip_tol)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= thresh:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                rp = a[p].copy()
                rq = a[q].copy()
                a[p] = rp - s * (rq + tau * rp)
                a[q] = rq + s * (rp - tau * rq)
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[:, p] = a[p]
                a[:, q] = a[q]
    return np.diag(a).copy(), sweep, converged


def oracle_adjacency_reduced(n: int, gcds: np.ndarray) -> np.ndarray:
    m = len(gcds)
    out = np.zeros((m, m), dtype=np.uint8)
    for i in range(m):
        sx = n // int(gcds[i])
        for j in range(i + 1, m):
            sy = n // int(gcds[j])
            if any((w * z) % n == 0 for w in range(sx, n, sx) for z in range(sy, n, sy)):
                out[i, j] = out[j, i] = 1
    return out


def oracle_adjacency_literal(n: int, xs: np.ndarray) -> np.ndarray:
    m = len(xs)
    anns = [[t for t in range(1, n) if (t * int(x)) % n == 0] for x in xs]
    out = np.zeros((m, m), dtype=np.uint8)
    for i in range(m):
        for j in range(i + 1, m):
            if any((w * z) % n == 0 for w in anns[i] for z in anns[j]):
                out[i, j] = out[j, i] = 1
    return out
