"""
Polynomials in x over the Rational Function Field

This module provides XPoly, a polynomial in the main variable x whose
coefficients are rational functions of n and the family parameters. It is
stored as a single normalized RatFun whose denominator is free of x, so
arithmetic costs one normalization per operation; `coeffs` exposes the
power-indexed view.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Mapping, Sequence, Tuple

from .errors import DivisibilityError, InvalidAffineError, NotPolynomialInXError, RingMismatchError
from .ratfun import Coefficient, RatFun, as_ratfun
from .rings import INDEX_VARIABLE, MAIN_VARIABLE, IndeterminateRing, MPoly


@dataclass(frozen=True)
class XPoly:
    """Polynomial in x with RatFun coefficients."""
    value: RatFun

    def __post_init__(self):
        if self.value.den.depends_on(MAIN_VARIABLE):
            raise NotPolynomialInXError(f"Denominator depends on x: {self.value}")

    # Construction

    @classmethod
    def from_ratfun(cls, value: RatFun) -> 'XPoly':
        return cls(value)

    @classmethod
    def from_mpoly(cls, poly: MPoly) -> 'XPoly':
        return cls(RatFun.of(poly))

    @classmethod
    def from_coeffs(cls, ring: IndeterminateRing, coeffs: Sequence[Coefficient]) -> 'XPoly':
        """Build sum(coeffs[k] * x^k); coefficients must be free of x."""
        x = RatFun.of(ring.gen(MAIN_VARIABLE))
        total = RatFun.zero(ring)
        for c in reversed(list(coeffs)):
            c = as_ratfun(ring, c)
            if c.depends_on(MAIN_VARIABLE):
                raise NotPolynomialInXError(f"Coefficient depends on x: {c}")
            total = total * x + c
        return cls(total)

    @classmethod
    def constant(cls, ring: IndeterminateRing, value: Coefficient) -> 'XPoly':
        return cls(as_ratfun(ring, value))

    @classmethod
    def zero(cls, ring: IndeterminateRing) -> 'XPoly':
        return cls(RatFun.zero(ring))

    @classmethod
    def one(cls, ring: IndeterminateRing) -> 'XPoly':
        return cls(RatFun.one(ring))

    @classmethod
    def x(cls, ring: IndeterminateRing) -> 'XPoly':
        return cls(RatFun.of(ring.gen(MAIN_VARIABLE)))

    # Structure

    @property
    def ring(self) -> IndeterminateRing:
        return self.value.ring

    @property
    def is_zero(self) -> bool:
        return self.value.is_zero

    @property
    def degree(self) -> int:
        """Degree in x; -1 for the zero polynomial."""
        return self.value.num.degree(MAIN_VARIABLE)

    @property
    def coeffs(self) -> Tuple[RatFun, ...]:
        """Coefficients indexed by power of x, up to the leading one."""
        if self.is_zero:
            return ()
        ring = self.ring
        grouped = self.value.num.coefficients_in(MAIN_VARIABLE)
        return tuple(RatFun.of(grouped[k], self.value.den) if k in grouped else RatFun.zero(ring)
                     for k in range(self.degree + 1))

    def coeff(self, power: int) -> RatFun:
        coeffs = self.coeffs
        return coeffs[power] if 0 <= power < len(coeffs) else RatFun.zero(self.ring)

    @property
    def leading_coefficient(self) -> RatFun:
        return self.coeff(self.degree) if not self.is_zero else RatFun.zero(self.ring)

    def is_free_of_x(self) -> bool:
        return self.degree <= 0

    def depends_on(self, name: str) -> bool:
        return self.value.depends_on(name)

    # Arithmetic

    def _coerce(self, other) -> 'XPoly':
        if isinstance(other, XPoly):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"Ring mismatch: {list(self.ring.names)} vs {list(other.ring.names)}")
            return other
        if isinstance(other, (RatFun, MPoly, int, Fraction)) and not isinstance(other, bool):
            return XPoly(as_ratfun(self.ring, other))
        return NotImplemented

    def __add__(self, other) -> 'XPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return XPoly(self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other) -> 'XPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return XPoly(self.value - other.value)

    def __rsub__(self, other) -> 'XPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return XPoly(other.value - self.value)

    def __mul__(self, other) -> 'XPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return XPoly(self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self) -> 'XPoly':
        return XPoly(-self.value)

    def __pow__(self, exponent: int) -> 'XPoly':
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"XPoly exponent must be a nonnegative integer, got {exponent!r}")
        return XPoly(self.value ** exponent)

    def scale(self, factor: Coefficient) -> 'XPoly':
        """Multiply by a coefficient free of x."""
        factor = as_ratfun(self.ring, factor)
        if factor.depends_on(MAIN_VARIABLE):
            raise NotPolynomialInXError(f"Scale factor depends on x: {factor}")
        return XPoly(self.value * factor)

    # Calculus

    def d_dx(self) -> 'XPoly':
        return XPoly(RatFun.of(self.value.num.diff(MAIN_VARIABLE), self.value.den))

    def derivative(self, order: int = 1) -> 'XPoly':
        result = self
        for _ in range(order):
            result = result.d_dx()
        return result

    def divide_exact(self, other: 'XPoly') -> 'XPoly':
        """
        Exact quotient in the polynomial ring over the rational function field.

        Raises:
            ZeroDenominatorError: If other is zero
            DivisibilityError: If other does not divide self; carries the remainder
        """
        other = self._coerce(other)
        quotient = self.value / other.value
        if quotient.den.depends_on(MAIN_VARIABLE):
            _, remainder = divmod_x(self, other)
            raise DivisibilityError(f"Division by {other.value} is not exact", remainder=remainder)
        return XPoly(quotient)

    def theta_c(self, c: Coefficient) -> 'XPoly':
        """Divided difference (p(x) - p(c)) / (x - c) by synthetic division."""
        c = as_ratfun(self.ring, c)
        if c.depends_on(MAIN_VARIABLE):
            raise NotPolynomialInXError(f"theta_c point depends on x: {c}")
        coeffs = self.coeffs
        if len(coeffs) <= 1:
            return XPoly.zero(self.ring)
        quotient: List[RatFun] = [RatFun.zero(self.ring)] * (len(coeffs) - 1)
        carry = coeffs[-1]
        quotient[-1] = carry
        for k in range(len(coeffs) - 2, 0, -1):
            carry = coeffs[k] + c * carry
            quotient[k - 1] = carry
        return XPoly.from_coeffs(self.ring, quotient)

    def at(self, c: Coefficient) -> RatFun:
        """Value p(c) for a point c free of x."""
        c = as_ratfun(self.ring, c)
        total = RatFun.zero(self.ring)
        for coefficient in reversed(self.coeffs):
            total = total * c + coefficient
        return total

    def subst_affine(self, a: Coefficient, b: Coefficient) -> 'XPoly':
        """Compose with x -> a*x + b."""
        a = as_ratfun(self.ring, a)
        b = as_ratfun(self.ring, b)
        if a.is_zero:
            raise InvalidAffineError("Affine substitution needs a != 0")
        if a.depends_on(MAIN_VARIABLE) or b.depends_on(MAIN_VARIABLE):
            raise NotPolynomialInXError("Affine coefficients must be free of x")
        image = XPoly(a) * XPoly.x(self.ring) + XPoly(b)
        result = XPoly.zero(self.ring)
        for coefficient in reversed(self.coeffs):
            result = result * image + XPoly(coefficient)
        return result

    def shift_index(self, k: int) -> 'XPoly':
        return XPoly(self.value.shift_index(k))

    def subs_index(self, scale: int, offset: int) -> 'XPoly':
        return XPoly(self.value.subs_index(scale, offset))

    def evaluate(self, assignment: Mapping[str, object]) -> 'XPoly':
        """Substitute rationals for n and/or parameters (never x)."""
        if MAIN_VARIABLE in assignment:
            raise ValueError("XPoly.evaluate does not substitute x")
        return XPoly(self.value.evaluate(assignment))

    def at_index(self, index: int) -> 'XPoly':
        return self.evaluate({INDEX_VARIABLE: index})

    def change_ring(self, ring: IndeterminateRing) -> 'XPoly':
        return XPoly(self.value.change_ring(ring))

    def __repr__(self) -> str:
        return f"XPoly({self.value.num})" if self.value.den.is_constant \
            else f"XPoly(({self.value.num})/({self.value.den}))"


def divmod_x(a: XPoly, b: XPoly) -> Tuple[XPoly, XPoly]:
    """Long division in x over the coefficient field: a = q*b + r, deg r < deg b."""
    b = a._coerce(b)
    if b.is_zero:
        raise DivisibilityError("Division by the zero polynomial", remainder=a)
    ring = a.ring
    remainder = list(a.coeffs)
    divisor = b.coeffs
    lead = divisor[-1]
    quotient = [RatFun.zero(ring)] * max(len(remainder) - len(divisor) + 1, 0)
    for k in range(len(remainder) - len(divisor), -1, -1):
        factor = remainder[k + len(divisor) - 1] / lead
        quotient[k] = factor
        for j, d in enumerate(divisor):
            remainder[k + j] = remainder[k + j] - factor * d
    return XPoly.from_coeffs(ring, quotient), XPoly.from_coeffs(ring, remainder[:len(divisor) - 1])


def wronskian(f: XPoly, g: XPoly) -> XPoly:
    """W(f, g) = f*g' - f'*g."""
    return f * g.d_dx() - f.d_dx() * g
