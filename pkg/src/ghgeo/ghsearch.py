"""Exact and certified Gromov-Hausdorff computations for finite spaces.

Twice the GH distance equals the minimum distortion over all
correspondences. For finite spaces it is enough to minimize over
relations of the form graph(f) with f: X -> Y union the reverse graph
of some g: Y -> X: any correspondence contains such a relation (pick
one partner per point), and removing pairs never increases the
distortion sup. Both searches below therefore range over (f, g) pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import kernels
from .correspondence import Correspondence, distortion
from .errors import DomainError, SizeLimitError
from .kernels import reference
from .metricspace import FiniteMetricSpace, big_scaled, common_scaled, diameter, scale

DEFAULT_PAIR_CAP = 10**7
DEFAULT_BUDGET = 500_000


@dataclass(frozen=True)
class GHInterval:
    """Certified bracket around a GH distance.

    lower_witness says where the lower bound comes from; upper_witness
    is a correspondence achieving twice the upper bound.
    """

    lower: Fraction
    upper: Fraction
    lower_witness: str
    upper_witness: Correspondence
    nodes_expanded: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


def search_space_size(x: FiniteMetricSpace, y: FiniteMetricSpace) -> int:
    """Number of (f, g) candidates the exhaustive search enumerates."""
    m, n = len(x), len(y)
    return n**m * m**n


def lower_bound_diam(x: FiniteMetricSpace, y: FiniteMetricSpace) -> Fraction:
    """Half the diameter gap never exceeds the GH distance."""
    return abs(diameter(x) - diameter(y)) / 2


def gh_to_point(x: FiniteMetricSpace) -> Fraction:
    """GH distance to the one-point space: half the diameter, exactly."""
    return diameter(x) / 2


def bruteforce_interval(
    x: FiniteMetricSpace, y: FiniteMetricSpace, max_pairs: int = DEFAULT_PAIR_CAP
) -> GHInterval:
    """Exhaustive minimum over all (f, g) pairs, with witness.

    Enumeration is lexicographic with first-witness semantics, so the
    returned correspondence is reproducible across backends. Raises
    SizeLimitError when the candidate count exceeds max_pairs.
    """
    size = search_space_size(x, y)
    if size > max_pairs:
        raise SizeLimitError(
            f"{len(x)}x{len(y)} instance needs {size} candidates (cap {max_pairs}); "
            "use gh_branch_and_bound instead"
        )
    scaled = common_scaled(x, y)
    if scaled is not None:
        xa, ya, den = scaled
        best, f, g = kernels.get().brute_min_distortion(xa, ya)
        best = int(best)
    else:
        xa, ya, den = big_scaled(x, y)
        best, f, g = reference.brute_min_distortion(xa, ya)
    pairs = {(i, int(f[i])) for i in range(len(x))}
    pairs |= {(int(g[j]), j) for j in range(len(y))}
    witness = Correspondence.from_pairs(len(x), len(y), sorted(pairs))
    value = Fraction(best, 2 * den)
    return GHInterval(value, value, "exhaustive-search", witness, size)


def gh_bruteforce(
    x: FiniteMetricSpace, y: FiniteMetricSpace, max_pairs: int = DEFAULT_PAIR_CAP
) -> Fraction:
    """Exact GH distance by exhaustive search (see bruteforce_interval)."""
    return bruteforce_interval(x, y, max_pairs).upper


class _BudgetExceeded(Exception):
    pass


def gh_branch_and_bound(
    x: FiniteMetricSpace,
    y: FiniteMetricSpace,
    budget: int = DEFAULT_BUDGET,
    seed: Correspondence | None = None,
) -> GHInterval:
    """Depth-first search over partner assignments with pruning.

    Points from both sides are assigned partners one at a time, largest
    eccentricity first (ties: left side, then lowest index); children
    are visited best partial distortion first (ties: lowest partner
    index); a branch is cut as soon as its partial distortion reaches
    the incumbent. The choices make results deterministic. When the
    whole tree is explored within the node budget the result is exact;
    otherwise the lower bound falls back to the diameter gap and is
    flagged in lower_witness.

    The incumbent starts at the distortion of seed when given, else at
    the full correspondence, whose distortion is max(diam X, diam Y).
    """
    if budget < 0:
        raise DomainError(f"budget must be nonnegative, got {budget}")
    xd, yd, den = big_scaled(x, y)
    m, n = len(x), len(y)
    diam_x = max(max(row) for row in xd)
    diam_y = max(max(row) for row in yd)

    if seed is not None:
        pi, pj = seed.pair_arrays()
        best = reference.distortion_pairs(xd, yd, [int(v) for v in pi], [int(v) for v in pj])
        best_pairs = seed.pairs()
    else:
        best = max(diam_x, diam_y)
        best_pairs = [(i, j) for i in range(m) for j in range(n)]

    ecc_x = [max(row) for row in xd]
    ecc_y = [max(row) for row in yd]
    slots = sorted(
        [(0, i) for i in range(m)] + [(1, j) for j in range(n)],
        key=lambda slot: (-(ecc_x[slot[1]] if slot[0] == 0 else ecc_y[slot[1]]), slot[0], slot[1]),
    )

    cur: list[tuple[int, int]] = []
    nodes = 0

    def descend(depth: int, partial: int) -> None:
        nonlocal best, best_pairs, nodes
        if depth == len(slots):
            if partial < best:
                best = partial
                best_pairs = cur.copy()
            return
        side, idx = slots[depth]
        span = n if side == 0 else m
        options = []
        for c in range(span):
            xi, yj = (idx, c) if side == 0 else (c, idx)
            row_x, row_y = xd[xi], yd[yj]
            worst = partial
            for pa, pb in cur:
                v = row_x[pa] - row_y[pb]
                if v < 0:
                    v = -v
                if v > worst:
                    worst = v
                    if worst >= best:
                        break
            if worst < best:
                options.append((worst, c, xi, yj))
        options.sort()
        for worst, _, xi, yj in options:
            if worst >= best:
                continue
            if nodes + 1 > budget:
                raise _BudgetExceeded
            nodes += 1
            cur.append((xi, yj))
            descend(depth + 1, worst)
            cur.pop()

    exhausted = True
    try:
        descend(0, 0)
    except _BudgetExceeded:
        exhausted = False

    upper = Fraction(best, 2 * den)
    witness = Correspondence.from_pairs(m, n, best_pairs)
    if exhausted:
        return GHInterval(upper, upper, "exhausted-search", witness, nodes)
    lower = Fraction(abs(diam_x - diam_y), 2 * den)
    return GHInterval(lower, upper, "diameter-bound", witness, nodes)


@dataclass(frozen=True)
class ScalingRow:
    lam1: Fraction
    lam2: Fraction
    expected: Fraction
    lower: Fraction
    upper: Fraction

    @property
    def matches(self) -> bool:
        return self.lower == self.expected == self.upper


def scaling_curve_check(x: FiniteMetricSpace, lambdas: Sequence) -> list[ScalingRow]:
    """Verify that rescaling moves at speed diam(x)/2 in GH distance.

    For each factor pair the expected distance |l1 - l2| * diam(x) / 2
    is bracketed by the diameter-gap lower bound and the distortion of
    an explicit correspondence (identity on labels; everything-to-point
    when a factor is zero). Both sides collapse onto the expected value,
    and each row records that.
    """
    lams = [Fraction(v) for v in lambdas]
    for v in lams:
        if v < 0:
            raise DomainError(f"scale factors must be nonnegative, got {v}")
    half_diam = diameter(x) / 2
    rows = []
    for i, l1 in enumerate(lams):
        for l2 in lams[i:]:
            a = scale(x, l1)
            b = scale(x, l2)
            if len(a) == len(b):
                corr = Correspondence.identity(len(a))
            else:
                corr = Correspondence.full(len(a), len(b))
            upper = distortion(corr, a, b) / 2
            lower = lower_bound_diam(a, b)
            rows.append(ScalingRow(l1, l2, abs(l1 - l2) * half_diam, lower, upper))
    return rows
