"""The glued geodesic between product thickenings and lattice thickenings.

For a window parameter delta in (0, 1/2) and a bounded path-connected
generator space X of diameter 1, the curve runs from R x_l1 (delta X)
down to the plain line (shrinking the fiber, speed 1 via
d = |d1 - d2| / 2 on the product leg), then out to the thick unit
lattice of thickness 1/2 - delta (speed 1 via d = |t1 - t2| on the
lattice leg). Across the two legs the distance is
d = d/2 + 1/2 - t, so the whole curve is additive in arc length.

This module evaluates those closed forms, realizes curve points as
finite windowed samples, and compares formula values against certified
correspondence bounds plus small exhaustive-search evidence.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .correspondence import (
    Correspondence,
    compose,
    distortion,
    label_bijection_corr,
    nearest_point_corr,
    projection_corr,
)
from .errors import DomainError
from .ghsearch import GHInterval, gh_branch_and_bound
from .intervals import IntervalUnion, sample, thick_lattice
from .metricspace import FiniteMetricSpace, diameter, l1_product, scale
from .rational import as_decimal, format_rational

REAL_LINE = "real-line"
REAL_PRODUCT = "real-product"
THICK_LATTICE = "thick-lattice"

# fixed small realization used for the exhaustive-search evidence side
EVIDENCE_WINDOW = 1
EVIDENCE_STEP = Fraction(1, 4)

DEFAULT_WINDOW = 3
DEFAULT_SAMPLE_STEP = Fraction(1, 20)
DEFAULT_EVIDENCE_BUDGET = 20_000


@dataclass(frozen=True)
class GeodesicPoint:
    """A point of the glued curve: line, fiber product, or thick lattice.

    The plain line is the shared canonical form of a zero-width fiber
    (d = 0) and a fully thick lattice (t = 1/2), so constructors
    collapse both onto the REAL_LINE tag.
    """

    tag: str
    value: Fraction | None
    delta: Fraction

    def label(self) -> str:
        if self.tag == REAL_LINE:
            return "R"
        if self.tag == REAL_PRODUCT:
            return f"R[d={format_rational(self.value)}]"
        return f"Z[t={format_rational(self.value)}]"


def _checked_delta(delta) -> Fraction:
    delta = Fraction(delta)
    if not 0 < delta < Fraction(1, 2):
        raise DomainError(f"delta must lie strictly inside (0, 1/2), got {delta}")
    return delta


def real_line(delta) -> GeodesicPoint:
    return GeodesicPoint(REAL_LINE, None, _checked_delta(delta))


def real_product(d, delta) -> GeodesicPoint:
    delta = _checked_delta(delta)
    d = Fraction(d)
    if not 0 <= d <= delta:
        raise DomainError(f"fiber width must lie in [0, {delta}], got {d}")
    if d == 0:
        return real_line(delta)
    return GeodesicPoint(REAL_PRODUCT, d, delta)


def lattice_point(t, delta) -> GeodesicPoint:
    delta = _checked_delta(delta)
    t = Fraction(t)
    if not Fraction(1, 2) - delta <= t <= Fraction(1, 2):
        raise DomainError(f"thickness must lie in [{Fraction(1, 2) - delta}, 1/2], got {t}")
    if t == Fraction(1, 2):
        return real_line(delta)
    return GeodesicPoint(THICK_LATTICE, t, delta)


def curve_point(s, delta) -> GeodesicPoint:
    """Unit-speed parametrization of the glued curve.

    s in [0, delta/2] shrinks the fiber (d = delta - 2s); s in
    [delta/2, 3 delta/2] thins the lattice (t = 1/2 - (s - delta/2)).
    Total length 3 delta / 2.
    """
    delta = _checked_delta(delta)
    s = Fraction(s)
    if not 0 <= s <= 3 * delta / 2:
        raise DomainError(f"arc length {s} outside [0, {3 * delta / 2}]")
    if s <= delta / 2:
        return real_product(delta - 2 * s, delta)
    return lattice_point(Fraction(1, 2) - (s - delta / 2), delta)


def formula_distance(p: GeodesicPoint, q: GeodesicPoint) -> Fraction:
    """Closed-form GH distance between two curve points.

    Product leg: |d1 - d2| / 2. Lattice leg: |t1 - t2|. Across legs:
    d/2 + 1/2 - t. The line behaves as d = 0 and t = 1/2 at once, which
    makes the three cases agree on overlaps.
    """
    if p.delta != q.delta:
        raise DomainError(f"curve points use different deltas: {p.delta} vs {q.delta}")
    product_like = (REAL_LINE, REAL_PRODUCT)
    lattice_like = (REAL_LINE, THICK_LATTICE)
    if p.tag in product_like and q.tag in product_like:
        d1 = p.value if p.tag == REAL_PRODUCT else Fraction(0)
        d2 = q.value if q.tag == REAL_PRODUCT else Fraction(0)
        return abs(d1 - d2) / 2
    if p.tag in lattice_like and q.tag in lattice_like:
        t1 = p.value if p.tag == THICK_LATTICE else Fraction(1, 2)
        t2 = q.value if q.tag == THICK_LATTICE else Fraction(1, 2)
        return abs(t1 - t2)
    if p.tag == THICK_LATTICE:
        t, d = p.value, q.value
    else:
        t, d = q.value, p.value
    return d / 2 + Fraction(1, 2) - t


@dataclass(frozen=True)
class GeneratorSpace:
    """Fiber space for the product leg; must have diameter exactly 1."""

    space: FiniteMetricSpace

    def __post_init__(self):
        if diameter(self.space) != 1:
            raise DomainError(f"generator space must have diameter 1, got {diameter(self.space)}")


def default_generator() -> GeneratorSpace:
    return GeneratorSpace(
        FiniteMetricSpace(("0", "1"), ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0))), validate=False)
    )


def _pair_hull(p: GeodesicPoint, q: GeodesicPoint) -> Fraction:
    """Half-extension of segment windows so both realizations share a hull."""
    if p.tag == THICK_LATTICE:
        return p.value
    if q.tag == THICK_LATTICE:
        return q.value
    return Fraction(1, 2)


def _realize_with_base(p: GeodesicPoint, window: int, step: Fraction, generator: GeneratorSpace, hull: Fraction):
    if window < 1:
        raise DomainError(f"window must be a positive integer, got {window}")
    step = Fraction(step)
    if step <= 0:
        raise DomainError(f"sample step must be positive, got {step}")
    if p.tag == THICK_LATTICE:
        return sample(thick_lattice(p.value, window), step), None
    segment = IntervalUnion.from_pairs([(-(window + hull), window + hull)])
    base = sample(segment, step)
    if p.tag == REAL_LINE:
        return base, base
    fiber = scale(generator.space, p.value)
    return l1_product(base, fiber), base


def realize(
    p: GeodesicPoint,
    window: int = DEFAULT_WINDOW,
    step=DEFAULT_SAMPLE_STEP,
    generator: GeneratorSpace | None = None,
) -> FiniteMetricSpace:
    """Finite windowed sample standing in for the unbounded model space.

    Lattice points sample their interval union directly; line and
    product points sample a segment matching the lattice hull width
    1/2, the product then crossing it with the scaled generator fiber.
    """
    generator = generator or default_generator()
    space, _ = _realize_with_base(p, window, Fraction(step), generator, Fraction(1, 2))
    return space


def _upper_corr(p, q, a, base_a, b, base_b) -> Correspondence:
    line_like = (REAL_LINE, THICK_LATTICE)
    if p.tag in line_like and q.tag in line_like:
        return nearest_point_corr(a, b)
    if p.tag in line_like and q.tag == REAL_PRODUCT:
        return compose(nearest_point_corr(a, base_b), projection_corr(b, base_b).transpose())
    if p.tag == REAL_PRODUCT and q.tag in line_like:
        return _upper_corr(q, p, b, base_b, a, base_a).transpose()
    return label_bijection_corr(a, b)


@dataclass(frozen=True)
class EmpiricalRow:
    """Formula value vs realized evidence for one pair of curve points."""

    p: GeodesicPoint
    q: GeodesicPoint
    formula: Fraction
    upper: Fraction
    upper_slack: Fraction
    lower: Fraction
    lower_kind: str
    nodes: int
    step: Fraction

    @property
    def ok(self) -> bool:
        return self.upper <= self.formula + self.step and self.lower <= self.formula + EVIDENCE_STEP


def empirical_gh(
    p: GeodesicPoint,
    q: GeodesicPoint,
    window: int = DEFAULT_WINDOW,
    step=DEFAULT_SAMPLE_STEP,
    budget: int = DEFAULT_EVIDENCE_BUDGET,
    generator: GeneratorSpace | None = None,
) -> EmpiricalRow:
    """Bracket the formula value with evidence from finite realizations.

    Upper side: an explicit correspondence between window realizations
    (nearest point along the line, fiber projection, or label identity)
    certifies GH <= distortion / 2 for the realized pair; its slack
    over the formula is bounded by the sample step. Lower side: a
    budgeted exhaustive search on deliberately tiny realizations, which
    is evidence, not proof, and is flagged as such.
    """
    formula = formula_distance(p, q)
    generator = generator or default_generator()
    hull = _pair_hull(p, q)
    step = Fraction(step)
    a, base_a = _realize_with_base(p, window, step, generator, hull)
    b, base_b = _realize_with_base(q, window, step, generator, hull)
    corr = _upper_corr(p, q, a, base_a, b, base_b)
    upper = distortion(corr, a, b) / 2

    tiny_a, tiny_base_a = _realize_with_base(p, EVIDENCE_WINDOW, EVIDENCE_STEP, generator, hull)
    tiny_b, tiny_base_b = _realize_with_base(q, EVIDENCE_WINDOW, EVIDENCE_STEP, generator, hull)
    tiny_seed = _upper_corr(p, q, tiny_a, tiny_base_a, tiny_b, tiny_base_b)
    interval = gh_branch_and_bound(tiny_a, tiny_b, budget=budget, seed=tiny_seed)
    kind = "exact" if interval.exact else interval.lower_witness
    return EmpiricalRow(
        p=p,
        q=q,
        formula=formula,
        upper=upper,
        upper_slack=upper - formula,
        lower=interval.lower,
        lower_kind=f"evidence:{kind}",
        nodes=interval.nodes_expanded,
        step=step,
    )


def empirical_grid(
    delta,
    grid_step,
    window: int = DEFAULT_WINDOW,
    step=DEFAULT_SAMPLE_STEP,
    budget: int = DEFAULT_EVIDENCE_BUDGET,
    generator: GeneratorSpace | None = None,
) -> list[EmpiricalRow]:
    """empirical_gh over the full (t, d) grid with the given spacing.

    Thickness runs over [1/2 - delta, 1/2] and fiber width over
    [0, delta], both in grid_step increments, so grid_step must divide
    delta. GHG_THREADS caps the worker threads used to fill the table.
    """
    delta = _checked_delta(delta)
    grid_step = Fraction(grid_step)
    if grid_step <= 0:
        raise DomainError(f"grid step must be positive, got {grid_step}")
    count = delta / grid_step
    if count.denominator != 1:
        raise DomainError(f"grid step {grid_step} does not divide delta {delta}")
    count = int(count)
    ts = [Fraction(1, 2) - delta + k * grid_step for k in range(count + 1)]
    ds = [k * grid_step for k in range(count + 1)]
    jobs = [(lattice_point(t, delta), real_product(d, delta)) for t in ts for d in ds]

    def work(pair):
        return empirical_gh(pair[0], pair[1], window=window, step=step, budget=budget, generator=generator)

    workers = kernels.thread_cap()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(work, jobs))
    return [work(job) for job in jobs]


@dataclass(frozen=True)
class GeodesicRow:
    s: Fraction
    s_prime: Fraction
    point: str
    point_prime: str
    distance: Fraction
    expected: Fraction

    @property
    def equal(self) -> bool:
        return self.distance == self.expected


def geodesic_table(delta, grid_step) -> list[GeodesicRow]:
    """Additivity table: formula distance vs |s - s'| over the whole curve.

    The grid covers [0, 3 delta / 2]; grid_step must divide the curve
    length. All ordered pairs appear, so a table over k+1 grid points
    has (k+1)^2 rows.
    """
    delta = _checked_delta(delta)
    grid_step = Fraction(grid_step)
    if grid_step <= 0:
        raise DomainError(f"grid step must be positive, got {grid_step}")
    span = 3 * delta / 2
    count = span / grid_step
    if count.denominator != 1:
        raise DomainError(f"grid step {grid_step} does not divide the curve length {span}")
    grid = [k * grid_step for k in range(int(count) + 1)]
    points = [curve_point(s, delta) for s in grid]
    rows = []
    for i, s in enumerate(grid):
        for j, s2 in enumerate(grid):
            rows.append(
                GeodesicRow(
                    s,
                    s2,
                    points[i].label(),
                    points[j].label(),
                    formula_distance(points[i], points[j]),
                    abs(s - s2),
                )
            )
    return rows


def _fmt(value: Fraction, decimal: bool) -> str:
    return as_decimal(value) if decimal else format_rational(value)


def write_geodesic_csv(rows: list[GeodesicRow], stream, decimal: bool = False) -> None:
    """CSV columns: s, s_prime, point, point_prime, distance, expected, equal."""
    stream.write("s,s_prime,point,point_prime,distance,expected,equal\n")
    for r in rows:
        stream.write(
            f"{_fmt(r.s, decimal)},{_fmt(r.s_prime, decimal)},{r.point},{r.point_prime},"
            f"{_fmt(r.distance, decimal)},{_fmt(r.expected, decimal)},{str(r.equal).lower()}\n"
        )


def write_empirical_csv(rows: list[EmpiricalRow], stream, decimal: bool = False) -> None:
    """CSV columns: t, d, formula, upper, upper_slack, lower, lower_kind, verdict."""

    def axis_t(point: GeodesicPoint) -> Fraction:
        return point.value if point.tag == THICK_LATTICE else Fraction(1, 2)

    def axis_d(point: GeodesicPoint) -> Fraction:
        return point.value if point.tag == REAL_PRODUCT else Fraction(0)

    stream.write("t,d,formula,upper,upper_slack,lower,lower_kind,verdict\n")
    for r in rows:
        stream.write(
            f"{_fmt(axis_t(r.p), decimal)},{_fmt(axis_d(r.q), decimal)},{_fmt(r.formula, decimal)},"
            f"{_fmt(r.upper, decimal)},{_fmt(r.upper_slack, decimal)},{_fmt(r.lower, decimal)},"
            f"{r.lower_kind},{'pass' if r.ok else 'fail'}\n"
        )
