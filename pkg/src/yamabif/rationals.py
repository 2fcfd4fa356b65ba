"""Exact rational parsing and the canonical ``"p/q"`` string form."""

import re
from fractions import Fraction

from .errors import SpectrumParseError

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a :class:`Fraction`.

    Python ints and Fractions pass through. Floats and decimal strings are
    rejected so that no value silently loses exactness.
    """
    if isinstance(text, bool):
        raise SpectrumParseError(f"not a rational: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise SpectrumParseError(f"rationals must be given as 'p/q' strings, got {text!r}")
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise SpectrumParseError(f"not a rational 'p/q' literal: {text!r}")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise SpectrumParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(value) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def decimal12(value) -> str:
    """Render a number with 12 significant digits (CSV output only)."""
    return format(float(value), ".12g")
