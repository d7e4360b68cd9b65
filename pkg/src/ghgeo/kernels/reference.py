"""Pure-Python kernels over arbitrary-precision integers.

Same contracts as the numba/numpy backends but on plain nested lists,
with no magnitude limit. This is the overflow fallback and the
independent cross-check used by the test suite.
"""

from __future__ import annotations

_INF = 2**62


def distortion_pairs(xd, yd, pi, pj) -> int:
    """Max of |xd[a][a'] - yd[b][b']| over all pairs of listed pairs."""
    k = len(pi)
    best = 0
    for a in range(k):
        ia, ja = pi[a], pj[a]
        row_x, row_y = xd[ia], yd[ja]
        for b in range(a + 1, k):
            v = row_x[pi[b]] - row_y[pj[b]]
            if v < 0:
                v = -v
            if v > best:
                best = v
    return best


def brute_min_distortion(xd, yd):
    """Minimum distortion over all map pairs (f: X->Y, g: Y->X).

    Enumerates f and g in lexicographic order, keeping the first
    strictly improving witness, so the result is deterministic.
    """
    m, n = len(xd), len(yd)
    f = [0] * m
    g = [0] * n
    best = _INF
    best_f = tuple(f)
    best_g = tuple(g)
    while True:
        a = 0
        for i in range(m):
            row_x, row_y = xd[i], yd[f[i]]
            for i2 in range(i + 1, m):
                v = row_x[i2] - row_y[f[i2]]
                if v < 0:
                    v = -v
                if v > a:
                    a = v
            if a >= best:
                break
        if a < best:
            for j in range(n):
                g[j] = 0
            while True:
                v = a
                for j in range(n):
                    gj = g[j]
                    row_x = xd[gj]
                    for j2 in range(j + 1, n):
                        w = row_x[g[j2]] - yd[j][j2]
                        if w < 0:
                            w = -w
                        if w > v:
                            v = w
                    if v >= best:
                        break
                    for i in range(m):
                        w = xd[i][gj] - yd[f[i]][j]
                        if w < 0:
                            w = -w
                        if w > v:
                            v = w
                    if v >= best:
                        break
                if v < best:
                    best = v
                    best_f = tuple(f)
                    best_g = tuple(g)
                pos = n - 1
                while pos >= 0:
                    g[pos] += 1
                    if g[pos] < m:
                        break
                    g[pos] = 0
                    pos -= 1
                if pos < 0:
                    break
        pos = m - 1
        while pos >= 0:
            f[pos] += 1
            if f[pos] < n:
                break
            f[pos] = 0
            pos -= 1
        if pos < 0:
            break
    return best, list(best_f), list(best_g)


def triangle_slack(d):
    """Min of d[i][j] + d[j][k] - d[i][k] over distinct triples.

    Returns (slack, i, j, k); slack >= 0 on a symmetric matrix means the
    triangle inequality holds everywhere. Fewer than 3 points reports
    the sentinel 2**62 with indices -1.
    """
    n = len(d)
    best = _INF
    bi = bj = bk = -1
    for j in range(n):
        row_j = d[j]
        for i in range(n):
            if i == j:
                continue
            dij = d[i][j]
            row_i = d[i]
            for k in range(n):
                if k == j or k == i:
                    continue
                s = dij + row_j[k] - row_i[k]
                if s < best:
                    best = s
                    bi, bj, bk = i, j, k
    return best, bi, bj, bk
