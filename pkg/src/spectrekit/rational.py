"""Exact rational scalars and points.

Scalars are ``fractions.Fraction`` values, re-exported as ``Rat``: arbitrary
precision, kept in lowest terms with a positive denominator, so equal values
have equal representations.  Points are fixed-length tuples of scalars, and
tuple comparison provides the lexicographic coordinate order used whenever a
canonical layout is needed.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Tuple, Union

from .errors import ParseError

Rat = Fraction
Point = Tuple[Rat, ...]
RatLike = Union[Rat, int, str]

# Accepted literals: optional sign, then digits, then optionally "/digits"
# (a fraction) or ".digits" (a terminating decimal).  Nothing else.
_RAT_RE = re.compile(r"[+-]?\d+(?:/\d+|\.\d+)?\Z")


def parse_rat(text: str) -> Rat:
    """Parse a rational literal such as ``"3/4"``, ``"-0.25"`` or ``"7"``.

    The result is canonical: ``parse_rat("3/6") == parse_rat("1/2")``.
    """
    s = text.strip()
    if not _RAT_RE.fullmatch(s):
        raise ParseError(f"malformed rational literal: {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in rational literal: {text!r}") from None


def format_rat(value: RatLike) -> str:
    """Render a rational canonically: ``"p/q"`` in lowest terms, or ``"p"``
    when the denominator is one.  ``parse_rat`` inverts this exactly."""
    return str(as_rat(value))


def as_rat(value: RatLike) -> Rat:
    """Coerce a string literal, int, or Fraction to a canonical Rat."""
    if isinstance(value, str):
        return parse_rat(value)
    return Fraction(value)


def point(*coords: RatLike) -> Point:
    """Build a point from rational-convertible coordinates.

    >>> point("1/2", 3)
    (Fraction(1, 2), Fraction(3, 1))
    """
    return tuple(as_rat(c) for c in coords)
