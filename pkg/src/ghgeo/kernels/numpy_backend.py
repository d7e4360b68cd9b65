"""Vectorized int64 kernels. Fallback backend when numba is absent."""

from __future__ import annotations

import numpy as np

_INF = np.int64(2**62)


def _assignments(length: int, base: int) -> np.ndarray:
    """All maps {0..length-1} -> {0..base-1} as rows, lexicographic."""
    count = base**length
    idx = np.arange(count, dtype=np.int64)
    cols = []
    for pos in range(length):
        power = base ** (length - 1 - pos)
        cols.append((idx // power) % base)
    return np.stack(cols, axis=1)


def distortion_pairs(xd: np.ndarray, yd: np.ndarray, pi: np.ndarray, pj: np.ndarray) -> int:
    k = len(pi)
    if k == 0:
        return 0
    best = 0
    # row chunks keep the k*k broadcast under control for large pair sets
    for start in range(0, k, 512):
        stop = min(start + 512, k)
        block = np.abs(xd[np.ix_(pi[start:stop], pi)] - yd[np.ix_(pj[start:stop], pj)])
        best = max(best, int(block.max()))
    return best


def brute_min_distortion(xd: np.ndarray, yd: np.ndarray):
    """Minimum distortion over all (f, g) map pairs, first witness kept.

    f is enumerated in an explicit lexicographic odometer; for each f
    the whole g space is evaluated as one vectorized pass, with
    np.argmin supplying the lexicographically first minimizer.
    """
    m, n = xd.shape[0], yd.shape[0]
    gg = _assignments(n, m)
    base_g = np.zeros(gg.shape[0], dtype=np.int64)
    for j in range(n):
        cj = gg[:, j]
        for j2 in range(j + 1, n):
            np.maximum(base_g, np.abs(xd[cj, gg[:, j2]] - yd[j, j2]), out=base_g)
    best = int(_INF)
    best_f = np.zeros(m, dtype=np.int64)
    best_gi = 0
    f = np.zeros(m, dtype=np.int64)
    while True:
        a = int(np.abs(xd - yd[f][:, f]).max())
        if a < best:
            v_all = np.maximum(base_g, np.int64(a))
            for i in range(m):
                row_x = xd[i]
                row_y = yd[f[i]]
                for j in range(n):
                    np.maximum(v_all, np.abs(row_x[gg[:, j]] - row_y[j]), out=v_all)
            gi = int(np.argmin(v_all))
            v = int(v_all[gi])
            if v < best:
                best = v
                best_f = f.copy()
                best_gi = gi
        pos = m - 1
        while pos >= 0:
            f[pos] += 1
            if f[pos] < n:
                break
            f[pos] = 0
            pos -= 1
        if pos < 0:
            break
    return best, best_f, gg[best_gi].copy()


def triangle_slack(d: np.ndarray):
    n = d.shape[0]
    if n < 3:
        return int(_INF), -1, -1, -1
    best = int(_INF)
    arg = (-1, -1, -1)
    for j in range(n):
        mat = d[:, j][:, None] + d[j, :][None, :] - d
        mat[j, :] = _INF
        mat[:, j] = _INF
        np.fill_diagonal(mat, _INF)
        flat = int(np.argmin(mat))
        v = int(mat.flat[flat])
        if v < best:
            best = v
            arg = (flat // n, j, flat % n)
    return (best, *arg)
