"""
Normalized Rational Functions

This module provides RatFun, the quotient of two MPoly in the same ring kept
in a canonical form so that structural equality is value equality:

- the denominator has coprime integer coefficients and a positive graded-lex
  leading coefficient;
- numerator and denominator share no non-unit factor;
- zero is 0/1.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .errors import RingMismatchError, ZeroDenominatorError
from .rational import as_rational
from .rings import INDEX_VARIABLE, IndeterminateRing, MPoly, gcd_mpoly


@dataclass(frozen=True)
class RatFun:
    """Canonical quotient num/den; build with RatFun.of or the ring helpers."""
    num: MPoly
    den: MPoly

    @classmethod
    def of(cls, num: MPoly, den: MPoly = None) -> 'RatFun':
        """
        Normalize num/den.

        Raises:
            RingMismatchError: If num and den live in different rings
            ZeroDenominatorError: If den is the zero polynomial
        """
        ring = num.ring
        if den is None:
            return cls(num, ring.one())
        if den.ring != ring:
            raise RingMismatchError(f"Ring mismatch: {list(ring.names)} vs {list(den.ring.names)}")
        if den.is_zero:
            raise ZeroDenominatorError(f"Zero denominator for numerator {num}")
        if num.is_zero:
            return cls(ring.zero(), ring.one())
        if den.is_constant:
            return cls(num.scale(1 / den.constant_value()), ring.one())

        common = gcd_mpoly(num, den)
        if not common.is_constant:
            num = num.exquo(common)
            den = den.exquo(common)
        unit, den = den.primitive()
        if unit != 1:
            num = num.scale(1 / unit)
        if den.is_constant:
            den = ring.one()
        return cls(num, den)

    @classmethod
    def constant(cls, ring: IndeterminateRing, value) -> 'RatFun':
        return cls(ring.constant(value), ring.one())

    @classmethod
    def zero(cls, ring: IndeterminateRing) -> 'RatFun':
        return cls(ring.zero(), ring.one())

    @classmethod
    def one(cls, ring: IndeterminateRing) -> 'RatFun':
        return cls(ring.one(), ring.one())

    @property
    def ring(self) -> IndeterminateRing:
        return self.num.ring

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_constant

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"Not a constant: {self}")
        return self.num.constant_value()

    def depends_on(self, name: str) -> bool:
        return self.num.depends_on(name) or self.den.depends_on(name)

    # Arithmetic

    def _coerce(self, other) -> 'RatFun':
        if isinstance(other, RatFun):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"Ring mismatch: {list(self.ring.names)} vs {list(other.ring.names)}")
            return other
        if isinstance(other, MPoly):
            return RatFun.of(other)._coerce_ring(self.ring)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RatFun.constant(self.ring, other)
        return NotImplemented

    def _coerce_ring(self, ring: IndeterminateRing) -> 'RatFun':
        if self.ring != ring:
            raise RingMismatchError(f"Ring mismatch: {list(self.ring.names)} vs {list(ring.names)}")
        return self

    def __add__(self, other) -> 'RatFun':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if self.den == other.den:
            if self.is_polynomial:
                return RatFun(self.num + other.num, self.den)
            return RatFun.of(self.num + other.num, self.den)
        return RatFun.of(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> 'RatFun':
        return RatFun(-self.num, self.den)

    def __sub__(self, other) -> 'RatFun':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'RatFun':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> 'RatFun':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero or other.is_zero:
            return RatFun.zero(self.ring)
        if self.is_polynomial and other.is_polynomial:
            return RatFun(self.num * other.num, self.den)
        return RatFun.of(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> 'RatFun':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero:
            raise ZeroDenominatorError(f"Division of {self} by zero")
        return RatFun.of(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> 'RatFun':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, exponent: int) -> 'RatFun':
        if not isinstance(exponent, int):
            raise ValueError(f"RatFun exponent must be an integer, got {exponent!r}")
        if exponent < 0:
            return RatFun.one(self.ring) / (self ** -exponent)
        return RatFun(self.num ** exponent, self.den ** exponent)

    def scale(self, factor) -> 'RatFun':
        factor = as_rational(factor)
        if not factor:
            return RatFun.zero(self.ring)
        return RatFun(self.num.scale(factor), self.den)

    # Substitution

    def diff(self, name: str) -> 'RatFun':
        """Quotient rule derivative with respect to one indeterminate."""
        if not self.den.depends_on(name):
            return RatFun.of(self.num.diff(name), self.den)
        return RatFun.of(self.num.diff(name) * self.den - self.num * self.den.diff(name), self.den ** 2)

    def substitute(self, replacements: Mapping[str, MPoly]) -> 'RatFun':
        return RatFun.of(self.num.substitute(replacements), self.den.substitute(replacements))

    def evaluate(self, assignment: Mapping[str, object]) -> 'RatFun':
        """Partial evaluation; ZeroDenominatorError if the denominator vanishes."""
        if not assignment:
            return self
        return RatFun.of(self.num.evaluate(assignment), self.den.evaluate(assignment))

    def subs_index(self, scale: int, offset: int) -> 'RatFun':
        """Substitute n -> scale*n + offset."""
        if scale == 1 and offset == 0:
            return self
        ring = self.ring
        image = ring.gen(INDEX_VARIABLE).scale(scale) + offset
        return self.substitute({INDEX_VARIABLE: image})

    def shift_index(self, k: int) -> 'RatFun':
        """Substitute n -> n + k."""
        return self.subs_index(1, k)

    def change_ring(self, ring: IndeterminateRing) -> 'RatFun':
        return RatFun.of(self.num.change_ring(ring), self.den.change_ring(ring))

    def __repr__(self) -> str:
        if self.den.is_constant:
            return f"RatFun({self.num})"
        return f"RatFun(({self.num})/({self.den}))"


Coefficient = Union[RatFun, MPoly, int, Fraction]


def as_ratfun(ring: IndeterminateRing, value: Coefficient) -> RatFun:
    """Lift an MPoly or rational constant into RatFun over `ring`."""
    if isinstance(value, RatFun):
        return value._coerce_ring(ring)
    if isinstance(value, MPoly):
        return RatFun.of(value)._coerce_ring(ring)
    return RatFun.constant(ring, value)
