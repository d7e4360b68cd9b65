"""Finite metric spaces with exact rational distance matrices."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import kernels
from .errors import DomainError, ParseError, ShapeError
from .rational import format_rational, parse_rational

# below this size the plain Python triangle sweep beats kernel dispatch
_FAST_TRIANGLE_MIN = 48


@dataclass(frozen=True)
class Violation:
    kind: str
    indices: tuple[int, ...]
    detail: str

    def __str__(self) -> str:
        where = ",".join(str(i) for i in self.indices)
        return f"{self.kind} at ({where}): {self.detail}"


@dataclass(frozen=True)
class MetricReport:
    size: int
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.valid:
            return f"valid metric on {self.size} point(s)"
        lines = [f"{len(self.violations)} axiom violation(s) on {self.size} point(s)"]
        lines += [str(v) for v in self.violations]
        return "\n".join(lines)


def _as_fraction_matrix(matrix) -> tuple[tuple[Fraction, ...], ...]:
    rows = [tuple(Fraction(v) for v in row) for row in matrix]
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ShapeError(f"distance matrix must be square, got row of length {len(row)} in {n}x{n}")
    return tuple(rows)


def _int_matrix(dist: tuple[tuple[Fraction, ...], ...]):
    """int64 view after clearing denominators, or None when it cannot fit."""
    den = 1
    for row in dist:
        for v in row:
            den = math.lcm(den, v.denominator)
    vals = [[v.numerator * (den // v.denominator) for v in row] for row in dist]
    top = max((max(abs(x) for x in row) for row in vals), default=0)
    if top >= kernels.INT_HEADROOM:
        return None, den
    return np.array(vals, dtype=np.int64).reshape(len(dist), len(dist)), den


class FiniteMetricSpace:
    """Immutable labelled point set with an exact rational metric.

    Labels are the identity of points; coordinate-bearing constructions
    (line samples, l1 products) encode their geometry in the label so
    that spaces round-trip through text exactly.
    """

    __slots__ = ("labels", "dist", "_int_view")

    def __init__(self, labels: Sequence[str], dist, validate: bool = True):
        labels = tuple(str(lab) for lab in labels)
        mat = _as_fraction_matrix(dist)
        if not labels:
            raise DomainError("a metric space needs at least one point")
        if len(labels) != len(mat):
            raise ShapeError(f"{len(labels)} labels for a {len(mat)}x{len(mat)} matrix")
        if len(set(labels)) != len(labels):
            raise DomainError("point labels must be distinct")
        for lab in labels:
            if not lab or any(c.isspace() for c in lab):
                raise DomainError(f"label {lab!r} is empty or contains whitespace")
        if validate:
            report = validate_metric(mat)
            if not report.valid:
                raise DomainError(str(report))
        self.labels = labels
        self.dist = mat
        self._int_view = None

    def __len__(self) -> int:
        return len(self.labels)

    def distance(self, i: int, j: int) -> Fraction:
        return self.dist[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteMetricSpace):
            return NotImplemented
        return self.labels == other.labels and self.dist == other.dist

    def __repr__(self) -> str:
        return f"FiniteMetricSpace({len(self)} points)"

    def scaled(self):
        """Cached (int64 matrix, denominator) view; matrix is None on overflow."""
        if self._int_view is None:
            self._int_view = _int_matrix(self.dist)
        return self._int_view


def common_scaled(a: FiniteMetricSpace, b: FiniteMetricSpace):
    """Both matrices on one common denominator, or None if int64 cannot hold them."""
    xa, la = a.scaled()
    yb, lb = b.scaled()
    if xa is None or yb is None:
        return None
    den = math.lcm(la, lb)
    ma, mb = den // la, den // lb
    if ma >= kernels.INT_HEADROOM or mb >= kernels.INT_HEADROOM:
        return None
    if int(np.abs(xa).max(initial=0)) * ma >= kernels.INT_HEADROOM:
        return None
    if int(np.abs(yb).max(initial=0)) * mb >= kernels.INT_HEADROOM:
        return None
    return xa * np.int64(ma), yb * np.int64(mb), den


def big_scaled(a: FiniteMetricSpace, b: FiniteMetricSpace):
    """Common-denominator integer matrices as nested Python lists.

    Arbitrary precision; always succeeds. Used by the branch-and-bound
    search and by the overflow fallback path.
    """
    den = 1
    for space in (a, b):
        for row in space.dist:
            for v in row:
                den = math.lcm(den, v.denominator)
    xa = [[v.numerator * (den // v.denominator) for v in row] for row in a.dist]
    yb = [[v.numerator * (den // v.denominator) for v in row] for row in b.dist]
    return xa, yb, den


def validate_metric(matrix) -> MetricReport:
    """Check the metric axioms and report every violated instance.

    Diagonal, symmetry and positivity are checked entrywise; the
    triangle inequality over all ordered triples (i, j, k) with i, j, k
    distinct and i < k. On large matrices that pass the basic axioms an
    integer kernel sweep decides validity first, so the cubic Python
    enumeration only runs when there is something to report.
    """
    dist = _as_fraction_matrix(matrix)
    n = len(dist)
    viol: list[Violation] = []
    for i in range(n):
        if dist[i][i] != 0:
            viol.append(Violation("nonzero-diagonal", (i,), f"d(i,i) = {dist[i][i]}"))
    for i in range(n):
        for j in range(i + 1, n):
            if dist[i][j] != dist[j][i]:
                viol.append(Violation("asymmetry", (i, j), f"{dist[i][j]} != {dist[j][i]}"))
            if dist[i][j] <= 0:
                viol.append(Violation("nonpositive", (i, j), f"d = {dist[i][j]}"))
    if n >= 3:
        symmetric_ok = not viol
        if symmetric_ok and n >= _FAST_TRIANGLE_MIN:
            ints, _ = _int_matrix(dist)
            if ints is not None:
                slack = kernels.get().triangle_slack(ints)[0]
                if slack >= 0:
                    return MetricReport(n, tuple(viol))
        for i in range(n):
            for k in range(i + 1, n):
                d_ik = dist[i][k]
                for j in range(n):
                    if j == i or j == k:
                        continue
                    if d_ik > dist[i][j] + dist[j][k]:
                        viol.append(
                            Violation(
                                "triangle",
                                (i, j, k),
                                f"d(i,k) = {d_ik} > {dist[i][j]} + {dist[j][k]}",
                            )
                        )
    return MetricReport(n, tuple(viol))


def diameter(space: FiniteMetricSpace) -> Fraction:
    """Largest pairwise distance; zero on a single point."""
    best = Fraction(0)
    n = len(space)
    for i in range(n):
        for j in range(i + 1, n):
            if space.dist[i][j] > best:
                best = space.dist[i][j]
    return best


def one_point(label: str = "pt") -> FiniteMetricSpace:
    return FiniteMetricSpace((label,), ((Fraction(0),),), validate=False)


def scale(space: FiniteMetricSpace, factor) -> FiniteMetricSpace:
    """Multiply every distance by a nonnegative rational.

    Factor zero collapses the space to the one-point space, keeping the
    result a genuine metric.
    """
    f = Fraction(factor)
    if f < 0:
        raise DomainError(f"scale factor must be nonnegative, got {f}")
    if f == 0:
        return one_point()
    dist = [[v * f for v in row] for row in space.dist]
    return FiniteMetricSpace(space.labels, dist, validate=False)


def l1_product(a: FiniteMetricSpace, b: FiniteMetricSpace) -> FiniteMetricSpace:
    """Product space with d((x,y),(x',y')) = d(x,x') + d(y,y').

    Sums of metrics are metrics, so the result skips revalidation.
    Labels compose as "left|right".
    """
    labels = [f"{la}|{lb}" for la in a.labels for lb in b.labels]
    na, nb = len(a), len(b)
    dist = []
    for ia in range(na):
        row_a = a.dist[ia]
        for ib in range(nb):
            row_b = b.dist[ib]
            dist.append([row_a[ja] + row_b[jb] for ja in range(na) for jb in range(nb)])
    return FiniteMetricSpace(labels, dist, validate=False)


def _nonblank_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped:
            yield lineno, stripped


def parse_metric_text(text: str):
    """Parse the on-disk format into (labels, matrix) without validating axioms.

    Format: point count line, one line of whitespace-separated labels,
    then a full square matrix of rationals, one row per line.
    """
    lines = list(_nonblank_lines(text))
    if not lines:
        raise ParseError("empty metric space file")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"expected point count, got {head!r}", lineno) from None
    if n < 1:
        raise ParseError(f"point count must be positive, got {n}", lineno)
    if len(lines) != n + 2:
        raise ParseError(f"expected {n + 2} content lines for {n} points, found {len(lines)}")
    lineno, label_line = lines[1]
    labels = label_line.split()
    if len(labels) != n:
        raise ParseError(f"expected {n} labels, got {len(labels)}", lineno)
    matrix = []
    for row_idx in range(n):
        lineno, row_line = lines[2 + row_idx]
        tokens = row_line.split()
        if len(tokens) != n:
            raise ParseError(f"expected {n} entries, got {len(tokens)}", lineno)
        matrix.append([parse_rational(tok, line=lineno) for tok in tokens])
    return labels, matrix


def parse_metric_space(text: str) -> FiniteMetricSpace:
    """Parse and validate a metric space file."""
    labels, matrix = parse_metric_text(text)
    return FiniteMetricSpace(labels, matrix, validate=True)


def format_metric_space(space: FiniteMetricSpace) -> str:
    """Inverse of parse_metric_space; round-trips exactly."""
    lines = [str(len(space)), " ".join(space.labels)]
    for row in space.dist:
        lines.append(" ".join(format_rational(v) for v in row))
    return "\n".join(lines) + "\n"
