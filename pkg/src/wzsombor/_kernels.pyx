# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot loops: cyclic Jacobi eigenvalues and the ring-definition adjacency scans."""

import numpy as np
from libc.math cimport fabs, sqrt


cdef inline void _rotate_rows(double* rp, double* rq, Py_ssize_t lo, Py_ssize_t hi,
                              double s, double tau) noexcept nogil:
    cdef Py_ssize_t r
    cdef double x, y
    for r in range(lo, hi):
        x = rp[r]
        y = rq[r]
        rp[r] = x - s * (y + tau * x)
        rq[r] = y + s * (x - tau * y)


def jacobi_eigenvalues(double[:, ::1] a, double off_tol, double skip_tol, int max_sweeps):
    """Diagonalize ``a`` in place with cyclic Jacobi sweeps.

    Returns ``(eigenvalues, sweeps, converged)``; eigenvalues are the final diagonal.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, r
    cdef int sweep = 0
    cdef double apq, app, aqq, theta, t, c, s, tau, off, thresh
    cdef bint converged = False
    cdef double* base = &a[0, 0] if n > 0 else NULL
    cdef double* rp
    cdef double* rq

    with nogil:
        while True:
            off = 0.0
            for p in range(n):
                for q in range(p + 1, n):
                    off += a[p, q] * a[p, q]
            off = sqrt(2.0 * off)
            if off <= off_tol:
                converged = True
                break
            if sweep >= max_sweeps:
                break
            sweep += 1
            # early sweeps only touch the large entries
            thresh = skip_tol
            if sweep <= 3:
                thresh = 0.2 * off / (<double>n * n)
                if thresh < skip_tol:
                    thresh = skip_tol
            for p in range(n - 1):
                rp = base + p * n
                for q in range(p + 1, n):
                    apq = rp[q]
                    if fabs(apq) <= thresh:
                        continue
                    rq = base + q * n
                    app = rp[p]
                    aqq = rq[q]
                    theta = (aqq - app) / (2.0 * apq)
                    t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    tau = s / (1.0 + c)
                    _rotate_rows(rp, rq, 0, p, s, tau)
                    _rotate_rows(rp, rq, p + 1, q, s, tau)
                    _rotate_rows(rp, rq, q + 1, n, s, tau)
                    rp[p] = app - t * apq
                    rq[q] = aqq + t * apq
                    rp[q] = 0.0
                    rq[p] = 0.0
                    for r in range(n):
                        base[r * n + p] = rp[r]
                        base[r * n + q] = rq[r]

    out = np.empty(n, dtype=np.float64)
    cdef double[::1] ov = out
    for p in range(n):
        ov[p] = a[p, p]
    return out, sweep, converged


def oracle_adjacency_reduced(long long n, long long[::1] gcds):
    """Adjacency from annihilators enumerated as nonzero multiples of ``n // gcd``.

    Entry (i, j) is 1 iff some w in ann*(x_i), z in ann*(x_j) have w*z = 0 mod n.
    """
    cdef Py_ssize_t m = gcds.shape[0]
    cdef Py_ssize_t i, j
    cdef long long dx, dy, sx, sy, w, z
    cdef bint hit
    out = np.zeros((m, m), dtype=np.uint8)
    cdef unsigned char[:, ::1] adj = out
    with nogil:
        for i in range(m):
            dx = gcds[i]
            sx = n // dx
            for j in range(i + 1, m):
                dy = gcds[j]
                sy = n // dy
                hit = False
                w = sx
                while w < n and not hit:
                    z = sy
                    while z < n:
                        if (w * z) % n == 0:
                            hit = True
                            break
                        z += sy
                    w += sx
                if hit:
                    adj[i, j] = 1
                    adj[j, i] = 1
    return out


def oracle_adjacency_literal(long long n, long long[::1] xs):
    """Adjacency by full annihilator scans over Z_n and an exhaustive witness loop."""
    cdef Py_ssize_t m = xs.shape[0]
    cdef Py_ssize_t i, j, a, b
    cdef long long t, x
    cdef bint hit
    ann = np.zeros((m, n), dtype=np.int64)
    counts = np.zeros(m, dtype=np.int64)
    cdef long long[:, ::1] av = ann
    cdef long long[::1] cv = counts
    out = np.zeros((m, m), dtype=np.uint8)
    cdef unsigned char[:, ::1] adj = out
    with nogil:
        for i in range(m):
            x = xs[i]
            for t in range(1, n):
                if (t * x) % n == 0:
                    av[i, cv[i]] = t
                    cv[i] += 1
        for i in range(m):
            for j in range(i + 1, m):
                hit = False
                for a in range(cv[i]):
                    for b in range(cv[j]):
                        if (av[i, a] * av[j, b]) % n == 0:
                            hit = True
                            break
                    if hit:
                        break
                if hit:
                    adj[i, j] = 1
                    adj[j, i] = 1
    return out
