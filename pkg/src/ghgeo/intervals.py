"""Finite unions of closed rational intervals on the line.

The canonical form is a sorted tuple of pairwise disjoint, non-touching
closed intervals; degenerate single-point intervals are allowed. All
set operations, distances and slices below are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, ParseError
from .metricspace import FiniteMetricSpace
from .rational import format_rational, parse_rational


@dataclass(frozen=True)
class IntervalUnion:
    intervals: tuple[tuple[Fraction, Fraction], ...]

    @staticmethod
    def from_pairs(pairs: Iterable[Sequence]) -> "IntervalUnion":
        """Canonicalize: sort, then merge touching or overlapping intervals."""
        cleaned = []
        for pair in pairs:
            lo, hi = Fraction(pair[0]), Fraction(pair[1])
            if hi < lo:
                raise DomainError(f"interval [{lo}, {hi}] has negative length")
            cleaned.append((lo, hi))
        cleaned.sort()
        merged: list[tuple[Fraction, Fraction]] = []
        for lo, hi in cleaned:
            if merged and lo <= merged[-1][1]:
                prev_lo, prev_hi = merged[-1]
                merged[-1] = (prev_lo, max(prev_hi, hi))
            else:
                merged.append((lo, hi))
        return IntervalUnion(tuple(merged))

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    def __contains__(self, x) -> bool:
        x = Fraction(x)
        return any(lo <= x <= hi for lo, hi in self.intervals)

    def hull(self) -> tuple[Fraction, Fraction]:
        if self.is_empty:
            raise DomainError("empty union has no hull")
        return self.intervals[0][0], self.intervals[-1][1]

    def total_length(self) -> Fraction:
        return sum((hi - lo for lo, hi in self.intervals), Fraction(0))


def thick_lattice(t, window: int) -> IntervalUnion:
    """Union of [n - t, n + t] for integers |n| <= window.

    Thickness t ranges over [0, 1/2]; at t = 1/2 consecutive intervals
    touch and the union merges into one segment.
    """
    t = Fraction(t)
    if not 0 <= t <= Fraction(1, 2):
        raise DomainError(f"thickness must lie in [0, 1/2], got {t}")
    if window < 1:
        raise DomainError(f"window must be a positive integer, got {window}")
    return IntervalUnion.from_pairs((n - t, n + t) for n in range(-window, window + 1))


def neighborhood(a: IntervalUnion, r) -> IntervalUnion:
    """Closed r-neighborhood: every endpoint pushed outward by r."""
    r = Fraction(r)
    if r < 0:
        raise DomainError(f"radius must be nonnegative, got {r}")
    return IntervalUnion.from_pairs((lo - r, hi + r) for lo, hi in a.intervals)


def intersect(a: IntervalUnion, b: IntervalUnion) -> IntervalUnion:
    """Exact intersection via a two-pointer sweep."""
    out = []
    i = j = 0
    while i < len(a.intervals) and j < len(b.intervals):
        alo, ahi = a.intervals[i]
        blo, bhi = b.intervals[j]
        lo, hi = max(alo, blo), min(ahi, bhi)
        if lo <= hi:
            out.append((lo, hi))
        if ahi < bhi:
            i += 1
        else:
            j += 1
    return IntervalUnion.from_pairs(out)


def _point_distance(x: Fraction, intervals) -> Fraction:
    best = None
    for lo, hi in intervals:
        if x < lo:
            d = lo - x
        elif x > hi:
            d = x - hi
        else:
            return Fraction(0)
        if best is None or d < best:
            best = d
    return best


def set_distance(a: IntervalUnion, b: IntervalUnion) -> Fraction:
    """inf |x - y| over x in a, y in b. Zero when they meet."""
    if a.is_empty or b.is_empty:
        raise DomainError("set distance needs two nonempty unions")
    best = None
    for lo, hi in a.intervals:
        for d in (_point_distance(lo, b.intervals), _point_distance(hi, b.intervals)):
            if best is None or d < best:
                best = d
    for lo, hi in b.intervals:
        for d in (_point_distance(lo, a.intervals), _point_distance(hi, a.intervals)):
            if best is None or d < best:
                best = d
    return best


def _directed_hausdorff(a: IntervalUnion, b: IntervalUnion) -> Fraction:
    """sup over x in a of d(x, b), exactly.

    On each interval of a the map x -> d(x, b) is piecewise linear with
    slopes in {-1, 0, 1}, breaking only at endpoints of b and at
    midpoints of b's gaps. Local maxima therefore sit at a's endpoints
    or at those gap midpoints that fall inside a; checking this finite
    candidate set is exact.
    """
    candidates: list[Fraction] = []
    for lo, hi in a.intervals:
        candidates.append(lo)
        candidates.append(hi)
    for (_, prev_hi), (next_lo, _) in zip(b.intervals, b.intervals[1:]):
        mid = (prev_hi + next_lo) / 2
        if mid in a:
            candidates.append(mid)
    return max(_point_distance(c, b.intervals) for c in candidates)


def hausdorff(a: IntervalUnion, b: IntervalUnion) -> Fraction:
    """Exact Hausdorff distance between two nonempty unions."""
    if a.is_empty or b.is_empty:
        raise DomainError("Hausdorff distance needs two nonempty unions")
    return max(_directed_hausdorff(a, b), _directed_hausdorff(b, a))


def canonical_slice(a: IntervalUnion, b: IntervalUnion, s) -> IntervalUnion:
    """Midpoint set B_s(a) meet B_(d-s)(b) on the segment between a and b.

    With d the Hausdorff distance, the slices interpolate from a (s = 0)
    to b (s = d) and move at unit Hausdorff speed: the distance between
    the s and s' slices is exactly |s - s'|.
    """
    s = Fraction(s)
    d = hausdorff(a, b)
    if not 0 <= s <= d:
        raise DomainError(f"slice parameter {s} outside [0, {d}]")
    return intersect(neighborhood(a, s), neighborhood(b, d - s))


def sample(a: IntervalUnion, step) -> FiniteMetricSpace:
    """Finite metric space of grid points of the union.

    Takes every multiple of step inside the union plus all interval
    endpoints, so consecutive samples within an interval are never more
    than step apart. Labels are the exact coordinates.
    """
    step = Fraction(step)
    if step <= 0:
        raise DomainError(f"step must be positive, got {step}")
    if a.is_empty:
        raise DomainError("cannot sample an empty union")
    coords: set[Fraction] = set()
    for lo, hi in a.intervals:
        coords.add(lo)
        coords.add(hi)
        x = math.ceil(lo / step) * step
        while x <= hi:
            coords.add(x)
            x += step
    pts = sorted(coords)
    labels = [format_rational(p) for p in pts]
    dist = [[abs(p - q) for q in pts] for p in pts]
    return FiniteMetricSpace(labels, dist, validate=False)


def parse_intervals(text: str) -> IntervalUnion:
    """Parse "lo,hi; lo,hi; ..." (semicolon-separated closed intervals)."""
    body = text.strip()
    if not body:
        return IntervalUnion(())
    pairs = []
    for chunk in body.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ParseError(f"expected 'lo,hi', got {chunk!r}")
        lo = parse_rational(parts[0])
        hi = parse_rational(parts[1])
        if hi < lo:
            raise ParseError(f"interval [{lo}, {hi}] has negative length")
        pairs.append((lo, hi))
    return IntervalUnion.from_pairs(pairs)


def format_intervals(a: IntervalUnion) -> str:
    return "; ".join(f"{format_rational(lo)},{format_rational(hi)}" for lo, hi in a.intervals)


@dataclass(frozen=True)
class SliceRow:
    s: Fraction
    s_prime: Fraction
    distance: Fraction
    expected: Fraction

    @property
    def equal(self) -> bool:
        return self.distance == self.expected


def slice_table(a: IntervalUnion, b: IntervalUnion, step) -> list[SliceRow]:
    """Hausdorff distances between all pairs of canonical slices.

    The grid runs from 0 to d = hausdorff(a, b) in the given step, which
    must divide d. Each row compares hausdorff(C_s, C_s') with |s - s'|.
    """
    step = Fraction(step)
    if step <= 0:
        raise DomainError(f"step must be positive, got {step}")
    d = hausdorff(a, b)
    count = d / step
    if count.denominator != 1:
        raise DomainError(f"step {step} does not divide the Hausdorff distance {d}")
    grid = [k * step for k in range(int(count) + 1)]
    slices = [canonical_slice(a, b, s) for s in grid]
    rows = []
    for i, s in enumerate(grid):
        for j, s2 in enumerate(grid):
            rows.append(SliceRow(s, s2, hausdorff(slices[i], slices[j]), abs(s - s2)))
    return rows


def write_slice_csv(rows: list[SliceRow], stream, decimal: bool = False) -> None:
    """CSV with columns s, s_prime, hausdorff, expected, equal."""
    from .rational import as_decimal

    fmt = (lambda v: as_decimal(v)) if decimal else format_rational
    stream.write("s,s_prime,hausdorff,expected,equal\n")
    for row in rows:
        stream.write(
            f"{fmt(row.s)},{fmt(row.s_prime)},{fmt(row.distance)},{fmt(row.expected)},{str(row.equal).lower()}\n"
        )
