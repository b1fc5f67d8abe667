# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled spectral-sum kernels.

Mirrors _kernels_py operation for operation (same factorization, same
summation order) so results match the pure-Python fallback bit for bit.
"""

from libc.math cimport pow as c_pow
from libc.stdlib cimport free, malloc

BACKEND = "cython"


def pair_family_sum(int n, int i, int j, int N, double s):
    if i < 0 or j < 0 or i + j > n - 1:
        raise ValueError(f"(i={i}, j={j}) out of range for n={n}")
    if N < 0:
        raise ValueError("N must be nonnegative")

    cdef int m = n + 1
    cdef int nmid = m - 2
    cdef int a, b, p, q
    cdef int mid[16]
    if nmid > 16:
        raise ValueError("n too large for the compiled kernel")
    for a in range(j):
        mid[a] = 1
    for a in range(j, n - 1 - i):
        mid[a] = 0
    for a in range(n - 1 - i, nmid):
        mid[a] = -1

    cdef double M = 1.0
    for a in range(nmid):
        for b in range(a + 1, nmid):
            M *= (<double> (mid[a] - mid[b] + (b - a))) / (<double> (b - a))
    M /= n

    cdef double *F = <double *> malloc((N + 1) * sizeof(double))
    cdef double *G = <double *> malloc((N + 1) * sizeof(double))
    if F == NULL or G == NULL:
        free(F)
        free(G)
        raise MemoryError()

    cdef double f, g, inv2d, t, acc, gp, amp
    cdef long long pi, pnj, qni, qj
    try:
        for q in range(1, N + 1):
            f = 1.0
            for b in range(nmid):
                f *= (<double> (q - mid[b] + (b + 1))) / (<double> (b + 1))
            F[q] = f
        for p in range(1, N + 1):
            g = 1.0
            for a in range(nmid):
                g *= (<double> (mid[a] + p + (n - 1 - a))) / (<double> (n - 1 - a))
            G[p] = g

        inv2d = 1.0 / (2 * (n - i - j))
        t = -2.0 * s
        acc = 0.0
        for p in range(1, N + 1):
            pi = p + i
            pnj = p + n - j
            gp = G[p] * M
            for q in range(1, N + 1):
                qni = q + n - i
                qj = q + j
                amp = (<double> (pi * qni + qj * pnj)) * inv2d
                acc += gp * F[q] * (<double> (p + q + n)) * c_pow(amp, t)
    finally:
        free(F)
        free(G)
    return acc


def axis_family_sum(int n, int i, int N, double s):
    if not 0 <= i <= n:
        raise ValueError(f"i={i} out of range for n={n}")
    cdef int p, u
    cdef double cni = 1.0
    for u in range(1, i + 1):
        cni = cni * (n - i + u) / u

    cdef double t = -2.0 * s
    cdef double acc = 0.0
    cdef double b, dim
    for p in range(1, N + 1):
        b = 1.0
        for u in range(1, n + 1):
            b *= (<double> (p + u)) / (<double> u)
        dim = cni * p / (p + i) * b
        acc += dim * c_pow((p + i) * 0.5, t)
    return acc
