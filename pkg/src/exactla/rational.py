"""
Exact rationals.

``fractions.Fraction`` is the rational type of the whole package: it keeps
numerator and denominator reduced with a positive denominator, so equality is
a field-wise comparison.
"""

import re
from fractions import Fraction
from typing import Union

from src.core.exceptions import ParseError

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r'^[+-]?\d+(/\d+)?$')


def parse_rational(text: str) -> Fraction:
    """
    Parse ``p`` or ``p/q`` into an exact rational.

    Args:
        text: Integer or quotient written without spaces

    Returns:
        The reduced rational

    Raises:
        ParseError: If the text is not an integer or a quotient of integers
    """
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ParseError(f"not a rational: {text!r}")
    value = Fraction(text)
    return value


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ints, strings and fractions; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if hasattr(value, 'item') and isinstance(value.item(), int):
        return Fraction(value.item())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(value: Fraction) -> str:
    """Write a rational as ``p`` or ``p/q``."""
    return str(Fraction(value))
