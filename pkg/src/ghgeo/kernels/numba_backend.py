"""numba-compiled int64 kernels. Default backend when numba imports."""

from __future__ import annotations

import numpy as np
from numba import njit

_INF = 2**62


@njit(cache=True)
def distortion_pairs(xd, yd, pi, pj):
    k = pi.shape[0]
    best = np.int64(0)
    for a in range(k):
        ia = pi[a]
        ja = pj[a]
        for b in range(a + 1, k):
            v = xd[ia, pi[b]] - yd[ja, pj[b]]
            if v < 0:
                v = -v
            if v > best:
                best = v
    return best


@njit(cache=True)
def brute_min_distortion(xd, yd):
    m = xd.shape[0]
    n = yd.shape[0]
    f = np.zeros(m, dtype=np.int64)
    g = np.zeros(n, dtype=np.int64)
    best = np.int64(_INF)
    best_f = np.zeros(m, dtype=np.int64)
    best_g = np.zeros(n, dtype=np.int64)
    while True:
        a = np.int64(0)
        for i in range(m):
            fi = f[i]
            for i2 in range(i + 1, m):
                v = xd[i, i2] - yd[fi, f[i2]]
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
                    for j2 in range(j + 1, n):
                        w = xd[gj, g[j2]] - yd[j, j2]
                        if w < 0:
                            w = -w
                        if w > v:
                            v = w
                    if v >= best:
                        break
                    for i in range(m):
                        w = xd[i, gj] - yd[f[i], j]
                        if w < 0:
                            w = -w
                        if w > v:
                            v = w
                    if v >= best:
                        break
                if v < best:
                    best = v
                    for i in range(m):
                        best_f[i] = f[i]
                    for j in range(n):
                        best_g[j] = g[j]
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
    return best, best_f, best_g


@njit(cache=True)
def triangle_slack(d):
    n = d.shape[0]
    best = np.int64(_INF)
    bi = np.int64(-1)
    bj = np.int64(-1)
    bk = np.int64(-1)
    for j in range(n):
        for i in range(n):
            if i == j:
                continue
            dij = d[i, j]
            for k in range(n):
                if k == j or k == i:
                    continue
                s = dij + d[j, k] - d[i, k]
                if s < best:
                    best = s
                    bi = np.int64(i)
                    bj = np.int64(j)
                    bk = np.int64(k)
    return best, bi, bj, bk
