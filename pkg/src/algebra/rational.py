"""
Rational Numbers

This module fixes the Rational type used at every API boundary of the kernel
and converts between it and the sympy ground domain.
"""

from fractions import Fraction
from typing import Union

from sympy.polys.domains import QQ


Rational = Fraction
RationalLike = Union[int, Fraction, str]


def as_rational(value: RationalLike) -> Fraction:
    """
    Coerce an int, Fraction or "p/q" string to a Fraction.

    Raises:
        ValueError: If the value is not an exact rational
    """
    if isinstance(value, bool):
        raise ValueError(f"Not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            numerator, _, denominator = text.partition('/')
            if not denominator:
                return Fraction(int(numerator))
            return Fraction(int(numerator), int(denominator))
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not a rational: {value!r}") from e
    raise ValueError(f"Not a rational: {value!r}")


def to_ground(value: Fraction):
    """Convert a Fraction to an element of sympy's QQ."""
    return QQ(value.numerator, value.denominator)


def from_ground(value) -> Fraction:
    """Convert an element of sympy's QQ (or ZZ) to a Fraction."""
    numerator = getattr(value, 'numerator', value)
    denominator = getattr(value, 'denominator', 1)
    return Fraction(int(numerator), int(denominator))


def format_rational(value: Fraction) -> str:
    """Render a Fraction as "p" or "p/q"."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
