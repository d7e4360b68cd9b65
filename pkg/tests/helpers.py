"""Shared test utilities: independent oracles and random generators.

The oracles here deliberately avoid the package's kernel dispatch so
that frozen expected values are cross-checked by a second computation
route: plain Fraction scans and dense float sampling.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from ghgeo.intervals import IntervalUnion
from ghgeo.metricspace import FiniteMetricSpace


def frac_distortion(pairs, x: FiniteMetricSpace, y: FiniteMetricSpace) -> Fraction:
    """Exhaustive pair-of-pairs distortion scan in pure Fractions."""
    best = Fraction(0)
    for a, (ia, ja) in enumerate(pairs):
        for ib, jb in pairs[a + 1 :]:
            v = abs(x.dist[ia][ib] - y.dist[ja][jb])
            if v > best:
                best = v
    return best


def dense_union_points(a: IntervalUnion, step: float) -> np.ndarray:
    chunks = []
    for lo, hi in a.intervals:
        lo_f, hi_f = float(lo), float(hi)
        chunks.append(np.arange(lo_f, hi_f, step))
        chunks.append(np.array([hi_f]))
    return np.concatenate(chunks)


def dense_hausdorff(a: IntervalUnion, b: IntervalUnion, step: float = 1e-3) -> float:
    """Dense-sampling Hausdorff oracle, accurate to about one step."""

    def directed(src_pts, dst: IntervalUnion):
        # distance from each sample to a closed interval is
        # max(lo - x, x - hi, 0); min over intervals, max over samples
        per = [
            np.maximum.reduce([float(lo) - src_pts, src_pts - float(hi), np.zeros_like(src_pts)])
            for lo, hi in dst.intervals
        ]
        return float(np.minimum.reduce(per).max())

    pa = dense_union_points(a, step)
    pb = dense_union_points(b, step)
    return max(directed(pa, b), directed(pb, a))


def random_fraction(rng: random.Random, max_num: int = 12, denominators=(1, 2, 3, 4, 5, 6)) -> Fraction:
    return Fraction(rng.randint(1, max_num), rng.choice(denominators))


def random_metric(rng: random.Random, n: int) -> FiniteMetricSpace:
    """Random rational metric via shortest-path closure of positive weights.

    Weights are strictly positive, so closed distances stay strictly
    positive and the triangle inequality holds by construction.
    """
    d = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            w = random_fraction(rng)
            d[i][j] = w
            d[j][i] = w
    for k in range(n):
        for i in range(n):
            for j in range(n):
                via = d[i][k] + d[k][j]
                if i != j and via < d[i][j]:
                    d[i][j] = via
    labels = [f"p{i}" for i in range(n)]
    return FiniteMetricSpace(labels, d, validate=False)


def random_union(rng: random.Random, max_intervals: int = 5) -> IntervalUnion:
    pairs = []
    for _ in range(rng.randint(1, max_intervals)):
        lo = Fraction(rng.randint(-60, 60), rng.choice((1, 2, 3, 4, 6, 10)))
        length = Fraction(rng.randint(0, 30), rng.choice((1, 2, 5, 10)))
        pairs.append((lo, lo + length))
    return IntervalUnion.from_pairs(pairs)


def two_point(dist=1) -> FiniteMetricSpace:
    d = Fraction(dist)
    return FiniteMetricSpace(("0", "1"), ((Fraction(0), d), (d, Fraction(0))), validate=False)


def segment(lo, hi) -> IntervalUnion:
    return IntervalUnion.from_pairs([(Fraction(lo), Fraction(hi))])
