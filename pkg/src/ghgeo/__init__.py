"""Exact rational toolkit for Gromov-Hausdorff geometry on the line."""

from .correspondence import (
    Correspondence,
    compose,
    distortion,
    format_correspondence,
    gh_upper_from_corr,
    nearest_point_corr,
    parse_correspondence,
    projection_corr,
)
from .errors import DomainError, ParseError, ShapeError, SizeLimitError
from .geodesy import (
    GeneratorSpace,
    GeodesicPoint,
    curve_point,
    default_generator,
    empirical_gh,
    empirical_grid,
    formula_distance,
    geodesic_table,
    lattice_point,
    real_line,
    real_product,
    realize,
)
from .ghsearch import (
    GHInterval,
    gh_branch_and_bound,
    gh_bruteforce,
    gh_to_point,
    lower_bound_diam,
    scaling_curve_check,
)
from .intervals import (
    IntervalUnion,
    canonical_slice,
    format_intervals,
    hausdorff,
    intersect,
    neighborhood,
    parse_intervals,
    sample,
    set_distance,
    thick_lattice,
)
from .metricspace import (
    FiniteMetricSpace,
    diameter,
    format_metric_space,
    l1_product,
    one_point,
    parse_metric_space,
    scale,
    validate_metric,
)

__version__ = "0.1.0"

__all__ = [
    "Correspondence",
    "DomainError",
    "FiniteMetricSpace",
    "GHInterval",
    "GeneratorSpace",
    "GeodesicPoint",
    "IntervalUnion",
    "ParseError",
    "ShapeError",
    "SizeLimitError",
    "canonical_slice",
    "compose",
    "curve_point",
    "default_generator",
    "diameter",
    "distortion",
    "empirical_gh",
    "empirical_grid",
    "format_correspondence",
    "format_intervals",
    "format_metric_space",
    "formula_distance",
    "geodesic_table",
    "gh_branch_and_bound",
    "gh_bruteforce",
    "gh_to_point",
    "gh_upper_from_corr",
    "hausdorff",
    "intersect",
    "l1_product",
    "lattice_point",
    "lower_bound_diam",
    "nearest_point_corr",
    "neighborhood",
    "one_point",
    "parse_correspondence",
    "parse_intervals",
    "parse_metric_space",
    "projection_corr",
    "real_line",
    "real_product",
    "realize",
    "sample",
    "scale",
    "scaling_curve_check",
    "set_distance",
    "thick_lattice",
    "validate_metric",
]
