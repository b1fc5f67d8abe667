"""Pure-Python spectral-sum kernels.

Reference implementation of the truncated family sums used by the direct
torsion route.  The compiled extension (_kernels_cy) mirrors this code
operation for operation, in the same order, so the two backends agree to
the last bit on the same inputs.
"""

from __future__ import annotations

from math import comb

BACKEND = "python"


def pair_family_sum(n: int, i: int, j: int, N: int, s: float) -> float:
    """sum_{p,q=1..N} dim(q,j,i,p) * eigenvalue(q,j,i,p)^(-s).

    The Weyl dimension factors as M * F(q) * G(p) * (p+q+n)/n because only
    the first and last weight entries depend on the free parameters; F and G
    are precomputed per row/column.  Summation order is (p outer, q inner),
    fixed for reproducibility.
    """
    if i < 0 or j < 0 or i + j > n - 1:
        raise ValueError(f"(i={i}, j={j}) out of range for n={n}")
    m = n + 1
    mid = (1,) * j + (0,) * (n - 1 - i - j) + (-1,) * i

    M = 1.0
    for a in range(m - 2):
        for b in range(a + 1, m - 2):
            M *= (mid[a] - mid[b] + (b - a)) / (b - a)
    M /= n

    F = [0.0] * (N + 1)
    G = [0.0] * (N + 1)
    for q in range(1, N + 1):
        f = 1.0
        for b in range(m - 2):
            f *= (q - mid[b] + (b + 1)) / (b + 1)
        F[q] = f
    for p in range(1, N + 1):
        g = 1.0
        for a in range(m - 2):
            g *= (mid[a] + p + (n - 1 - a)) / (n - 1 - a)
        G[p] = g

    inv2d = 1.0 / (2 * (n - i - j))
    t = -2.0 * s
    acc = 0.0
    for p in range(1, N + 1):
        pi = p + i
        pnj = p + n - j
        gp = G[p] * M
        for q in range(1, N + 1):
            amp = (pi * (q + n - i) + (q + j) * pnj) * inv2d
            acc += gp * F[q] * (p + q + n) * amp**t
    return acc


def axis_family_sum(n: int, i: int, N: int, s: float) -> float:
    """sum_{p=1..N} dim V(0^{n-i}, -1^i, -p) * ((p+i)/2)^(-2s).

    Serves the one-parameter families: the holomorphic/antiholomorphic edge
    cases (i <= n-1) and, at i = n, the two top-degree families.
    """
    if not 0 <= i <= n:
        raise ValueError(f"i={i} out of range for n={n}")
    cni = float(comb(n, i))
    t = -2.0 * s
    acc = 0.0
    for p in range(1, N + 1):
        b = 1.0
        for u in range(1, n + 1):
            b *= (p + u) / u
        dim = cni * p / (p + i) * b
        acc += dim * ((p + i) * 0.5) ** t
    return acc
