"""Correspondences between finite metric spaces and their distortion.

A correspondence is a relation between two index sets that touches
every point on both sides. Half its distortion is an upper bound for
the Gromov-Hausdorff distance, which is what makes explicit
correspondences useful as certificates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import DomainError, ParseError, ShapeError
from .kernels import reference
from .metricspace import FiniteMetricSpace, big_scaled, common_scaled


class Correspondence:
    """Boolean incidence matrix, surjective onto rows and columns."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        mat = np.ascontiguousarray(np.asarray(matrix, dtype=bool))
        if mat.ndim != 2 or mat.shape[0] == 0 or mat.shape[1] == 0:
            raise ShapeError(f"incidence matrix must be 2-d and nonempty, got shape {mat.shape}")
        rows_ok = mat.any(axis=1)
        if not rows_ok.all():
            raise DomainError(f"left point {int(np.argmin(rows_ok))} is matched to nothing")
        cols_ok = mat.any(axis=0)
        if not cols_ok.all():
            raise DomainError(f"right point {int(np.argmin(cols_ok))} is matched to nothing")
        mat.setflags(write=False)
        self.matrix = mat

    @property
    def m(self) -> int:
        return self.matrix.shape[0]

    @property
    def n(self) -> int:
        return self.matrix.shape[1]

    def pairs(self) -> list[tuple[int, int]]:
        """Incident index pairs in row-major order."""
        return [(int(i), int(j)) for i, j in np.argwhere(self.matrix)]

    def pair_arrays(self):
        idx = np.argwhere(self.matrix)
        return np.ascontiguousarray(idx[:, 0]), np.ascontiguousarray(idx[:, 1])

    def transpose(self) -> "Correspondence":
        return Correspondence(self.matrix.T)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Correspondence):
            return NotImplemented
        return self.matrix.shape == other.matrix.shape and bool((self.matrix == other.matrix).all())

    def __repr__(self) -> str:
        return f"Correspondence({self.m}x{self.n}, {int(self.matrix.sum())} pairs)"

    @staticmethod
    def identity(k: int) -> "Correspondence":
        return Correspondence(np.eye(k, dtype=bool))

    @staticmethod
    def full(m: int, n: int) -> "Correspondence":
        return Correspondence(np.ones((m, n), dtype=bool))

    @staticmethod
    def from_pairs(m: int, n: int, pairs: Iterable[Sequence[int]]) -> "Correspondence":
        mat = np.zeros((m, n), dtype=bool)
        for i, j in pairs:
            if not (0 <= i < m and 0 <= j < n):
                raise ShapeError(f"pair ({i}, {j}) outside a {m}x{n} correspondence")
            mat[i, j] = True
        return Correspondence(mat)


def distortion(corr: Correspondence, x: FiniteMetricSpace, y: FiniteMetricSpace) -> Fraction:
    """sup over matched pairs (a,b), (a',b') of |d_X(a,a') - d_Y(b,b')|."""
    if corr.m != len(x) or corr.n != len(y):
        raise ShapeError(f"correspondence is {corr.m}x{corr.n} but spaces have {len(x)} and {len(y)} points")
    pi, pj = corr.pair_arrays()
    scaled = common_scaled(x, y)
    if scaled is not None:
        xa, ya, den = scaled
        value = kernels.get().distortion_pairs(xa, ya, pi, pj)
        return Fraction(int(value), den)
    xa, ya, den = big_scaled(x, y)
    value = reference.distortion_pairs(xa, ya, [int(v) for v in pi], [int(v) for v in pj])
    return Fraction(value, den)


def gh_upper_from_corr(corr: Correspondence, x: FiniteMetricSpace, y: FiniteMetricSpace) -> Fraction:
    """Certified upper bound: half the distortion of the correspondence."""
    return distortion(corr, x, y) / 2


def compose(r: Correspondence, s: Correspondence) -> Correspondence:
    """Relational composition; distortion is subadditive under it."""
    if r.n != s.m:
        raise ShapeError(f"cannot compose {r.m}x{r.n} with {s.m}x{s.n}")
    prod = r.matrix.astype(np.int64) @ s.matrix.astype(np.int64)
    return Correspondence(prod > 0)


def line_coordinates(space: FiniteMetricSpace) -> list[Fraction]:
    """Recover coordinates from the labels of a line sample."""
    coords = []
    for lab in space.labels:
        try:
            coords.append(Fraction(lab))
        except (ValueError, ZeroDivisionError):
            raise DomainError(f"label {lab!r} does not encode a line coordinate") from None
    return coords


def nearest_point_corr(a: FiniteMetricSpace, b: FiniteMetricSpace) -> Correspondence:
    """Match every point with all of its nearest points on the other side.

    Both spaces must be line samples (labels are coordinates). Ties are
    kept, never broken, so the result is symmetric in construction and
    deterministic.
    """
    xa = line_coordinates(a)
    xb = line_coordinates(b)
    mat = np.zeros((len(xa), len(xb)), dtype=bool)
    for i, p in enumerate(xa):
        best = min(abs(p - q) for q in xb)
        for j, q in enumerate(xb):
            if abs(p - q) == best:
                mat[i, j] = True
    for j, q in enumerate(xb):
        best = min(abs(p - q) for p in xa)
        for i, p in enumerate(xa):
            if abs(p - q) == best:
                mat[i, j] = True
    return Correspondence(mat)


def projection_corr(product: FiniteMetricSpace, base: FiniteMetricSpace) -> Correspondence:
    """Match each product point "r|x" with its first factor r in the base."""
    index = {lab: k for k, lab in enumerate(base.labels)}
    mat = np.zeros((len(product), len(base)), dtype=bool)
    for i, lab in enumerate(product.labels):
        head, sep, _ = lab.partition("|")
        if not sep or head not in index:
            raise ShapeError(f"label {lab!r} does not project onto the given base")
        mat[i, index[head]] = True
    return Correspondence(mat)


def label_bijection_corr(a: FiniteMetricSpace, b: FiniteMetricSpace) -> Correspondence:
    """Identify points of equal label; both label sets must coincide."""
    index = {lab: j for j, lab in enumerate(b.labels)}
    if len(a) != len(b) or any(lab not in index for lab in a.labels):
        raise DomainError("spaces do not share a common label set")
    mat = np.zeros((len(a), len(b)), dtype=bool)
    for i, lab in enumerate(a.labels):
        mat[i, index[lab]] = True
    return Correspondence(mat)


def parse_correspondence(text: str) -> Correspondence:
    """Parse "m n" header plus one "i j" pair per line (0-based)."""
    lines = [
        (no, stripped)
        for no, raw in enumerate(text.splitlines(), start=1)
        if (stripped := raw.strip())
    ]
    if not lines:
        raise ParseError("empty correspondence file")
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 2:
        raise ParseError(f"expected 'm n' header, got {head!r}", no)
    try:
        m, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"expected integer sizes, got {head!r}", no) from None
    pairs = []
    for no, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'i j' pair, got {line!r}", no)
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"expected integer indices, got {line!r}", no) from None
    try:
        return Correspondence.from_pairs(m, n, pairs)
    except (ShapeError, DomainError) as exc:
        raise ParseError(str(exc)) from None


def format_correspondence(corr: Correspondence) -> str:
    lines = [f"{corr.m} {corr.n}"]
    lines += [f"{i} {j}" for i, j in corr.pairs()]
    return "\n".join(lines) + "\n"
