"""
Dense Rational Polynomials

QPoly is the oracle's own polynomial in x with Fraction coefficients. It is
independent of the symbolic kernel so that numeric checks do not reuse the
arithmetic they certify.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from algebra import XPoly, format_rational


Number = Union[int, Fraction]


def _trim(coeffs: Iterable[Fraction]) -> Tuple[Fraction, ...]:
    values = [Fraction(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class QPoly:
    """Coefficients low to high; no trailing zeros, () is the zero polynomial."""
    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', _trim(self.coeffs))

    @classmethod
    def zero(cls) -> 'QPoly':
        return cls(())

    @classmethod
    def one(cls) -> 'QPoly':
        return cls((Fraction(1),))

    @classmethod
    def x(cls) -> 'QPoly':
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def constant(cls, value: Number) -> 'QPoly':
        return cls((Fraction(value),))

    @classmethod
    def from_xpoly(cls, p: XPoly) -> 'QPoly':
        """
        Convert an XPoly whose coefficients are rational constants.

        Raises:
            ValueError: If a coefficient still depends on n or a parameter
        """
        return cls(tuple(c.constant_value() for c in p.coeffs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def is_monic(self) -> bool:
        return self.leading_coefficient == 1

    def _coerce(self, other) -> 'QPoly':
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QPoly.constant(other)
        return NotImplemented

    def __add__(self, other) -> 'QPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (size - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (size - len(other.coeffs))
        return QPoly(tuple(u + v for u, v in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> 'QPoly':
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> 'QPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'QPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> 'QPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero or other.is_zero:
            return QPoly.zero()
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return QPoly(tuple(product))

    __rmul__ = __mul__

    def scale(self, factor: Number) -> 'QPoly':
        factor = Fraction(factor)
        return QPoly(tuple(c * factor for c in self.coeffs))

    def derivative(self, order: int = 1) -> 'QPoly':
        coeffs = self.coeffs
        for _ in range(order):
            coeffs = tuple(k * c for k, c in enumerate(coeffs))[1:]
        return QPoly(coeffs)

    def __call__(self, point: Number) -> Fraction:
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * point + c
        return total

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            magnitude = abs(c)
            power = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not power:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = power
            else:
                body = f"{format_rational(magnitude)}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign}{body}" if parts else (f"-{body}" if c < 0 else body))
        return "".join(parts)


def combine(coeffs: Sequence[QPoly], values: Sequence[QPoly]) -> QPoly:
    """sum_i coeffs[i] * values[i]"""
    total = QPoly.zero()
    for c, v in zip(coeffs, values):
        total = total + c * v
    return total
