"""Helpers around exact rational numbers.

All quantitative state in this package is a ``fractions.Fraction``.
Fraction already guarantees lowest terms, a positive denominator and
exact decidable arithmetic, so these are plain parse/format helpers
plus the scaling utilities used to hand matrices to integer kernels.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .errors import ParseError


def parse_rational(text: str, line: int | None = None) -> Fraction:
    """Parse ``p/q`` or integer notation into a Fraction.

    A zero denominator is a parse error, not an arithmetic error.
    """
    token = text.strip()
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in rational {token!r}", line) from None
    except ValueError:
        raise ParseError(f"malformed rational {token!r}", line) from None


def format_rational(value: Fraction) -> str:
    """Canonical text form, ``p/q`` or bare integer."""
    return str(value)


def as_decimal(value: Fraction, digits: int = 12) -> str:
    """Decimal rendering for display. Lossy; never used for state."""
    s = f"{float(value):.{digits}g}"
    return s


def common_denominator(values: Iterable[Fraction]) -> int:
    """Least common denominator of a collection of rationals."""
    den = 1
    for v in values:
        den = math.lcm(den, v.denominator)
    return den


def scaled_ints(values: Iterable[Fraction], den: int) -> list[int]:
    """Numerators after clearing ``den``. Exact by construction."""
    return [v.numerator * (den // v.denominator) for v in values]
