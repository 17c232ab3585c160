"""
Indeterminate Rings and Multivariate Polynomials

This module provides the fixed indeterminate ring {x, n} ∪ parameters and the
sparse multivariate polynomial MPoly over the rationals, backed by sympy's
sparse PolyRing in graded-lexicographic order. It also hosts the exact
multivariate GCD used to normalize rational functions and ODE coefficients.
"""

from fractions import Fraction
from functools import reduce
from math import gcd as int_gcd
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from sympy import Symbol
from sympy.polys.densebasic import dmp_from_dict, dmp_to_dict
from sympy.polys.domains import QQ, ZZ
from sympy.polys.euclidtools import dmp_inner_gcd
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyRing

from .errors import DivisibilityError, RingMismatchError
from .rational import as_rational, from_ground, to_ground

MAIN_VARIABLE = "x"
INDEX_VARIABLE = "n"

Monomial = Tuple[int, ...]


def _lcm(a: int, b: int) -> int:
    return a * b // int_gcd(a, b)


class IndeterminateRing:
    """
    Ordered indeterminates x, n followed by the declared parameters.

    The ring is fixed when a family is loaded; two rings are equal iff their
    name tuples are equal.
    """

    def __init__(self, params: Sequence[str] = ()):
        params = tuple(params)
        for name in params:
            if not name.isidentifier() or name in (MAIN_VARIABLE, INDEX_VARIABLE):
                raise ValueError(f"Invalid parameter name: {name!r}")
        if len(set(params)) != len(params):
            raise ValueError(f"Duplicate parameter names: {list(params)}")

        self.params = params
        self.names = (MAIN_VARIABLE, INDEX_VARIABLE) + params
        symbols = [Symbol(name) for name in self.names]
        self._ring = PolyRing(symbols, QQ, grlex)
        self._index = {name: i for i, name in enumerate(self.names)}

    def __eq__(self, other) -> bool:
        return isinstance(other, IndeterminateRing) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"IndeterminateRing({list(self.params)})"

    @property
    def ngens(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        """Position of an indeterminate; KeyError if undeclared."""
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"Indeterminate {name!r} not in ring {list(self.names)}") from None

    def has(self, name: str) -> bool:
        return name in self._index

    def gen(self, name: str) -> 'MPoly':
        return MPoly(self, self._ring.gens[self.index(name)])

    def zero(self) -> 'MPoly':
        return MPoly(self, self._ring.zero)

    def one(self) -> 'MPoly':
        return MPoly(self, self._ring.one)

    def constant(self, value) -> 'MPoly':
        return MPoly(self, self._ring.ground_new(to_ground(as_rational(value))))

    def without(self, names: Iterable[str]) -> 'IndeterminateRing':
        """Ring with some parameters removed (x and n always stay)."""
        dropped = set(names)
        return IndeterminateRing([p for p in self.params if p not in dropped])


class MPoly:
    """
    Sparse multivariate polynomial with rational coefficients.

    Values are immutable: every operation returns a new MPoly and the wrapped
    sympy element is never modified in place.
    """

    __slots__ = ("ring", "_poly")

    def __init__(self, ring: IndeterminateRing, poly):
        self.ring = ring
        self._poly = poly

    @classmethod
    def from_terms(cls, ring: IndeterminateRing, terms: Mapping[Monomial, object]) -> 'MPoly':
        data = {}
        for monom, coeff in terms.items():
            if len(monom) != ring.ngens:
                raise ValueError(f"Exponent vector {monom} does not match ring {list(ring.names)}")
            value = as_rational(coeff) if not isinstance(coeff, Fraction) else coeff
            if value:
                data[tuple(monom)] = to_ground(value)
        return cls(ring, ring._ring.from_dict(data))

    # Coercion and structure

    def _coerce(self, other) -> 'MPoly':
        if isinstance(other, MPoly):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"Ring mismatch: {list(self.ring.names)} vs {list(other.ring.names)}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ring.constant(other)
        return NotImplemented

    @property
    def is_zero(self) -> bool:
        return not self._poly

    @property
    def is_constant(self) -> bool:
        return self._poly.is_ground

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"Not a constant polynomial: {self}")
        return from_ground(self._poly.LC) if self._poly else Fraction(0)

    def terms(self) -> Dict[Monomial, Fraction]:
        """Terms in graded-lex descending order."""
        return {monom: from_ground(coeff) for monom, coeff in self._poly.terms()}

    def degree(self, name: str = MAIN_VARIABLE) -> int:
        """Degree in one indeterminate; -1 for the zero polynomial."""
        if self.is_zero:
            return -1
        i = self.ring.index(name)
        return max(monom[i] for monom in self._poly.keys())

    def total_degree(self) -> int:
        if self.is_zero:
            return -1
        return max(sum(monom) for monom in self._poly.keys())

    def depends_on(self, name: str) -> bool:
        return self.degree(name) > 0

    def variables(self) -> Tuple[str, ...]:
        return tuple(name for name in self.ring.names if self.depends_on(name))

    @property
    def leading_coefficient(self) -> Fraction:
        """Coefficient of the graded-lex leading term."""
        return from_ground(self._poly.LC)

    @property
    def leading_monomial(self) -> Monomial:
        return self._poly.LM

    def coefficients_in(self, name: str = MAIN_VARIABLE) -> Dict[int, 'MPoly']:
        """Split into {power: coefficient MPoly free of `name`}."""
        i = self.ring.index(name)
        grouped: Dict[int, dict] = {}
        for monom, coeff in self._poly.items():
            power = monom[i]
            stripped = monom[:i] + (0,) + monom[i + 1:]
            grouped.setdefault(power, {})[stripped] = coeff
        return {power: MPoly(self.ring, self.ring._ring.from_dict(data))
                for power, data in sorted(grouped.items())}

    # Arithmetic

    def __add__(self, other) -> 'MPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return MPoly(self.ring, self._poly + other._poly)

    __radd__ = __add__

    def __sub__(self, other) -> 'MPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return MPoly(self.ring, self._poly - other._poly)

    def __rsub__(self, other) -> 'MPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return MPoly(self.ring, other._poly - self._poly)

    def __mul__(self, other) -> 'MPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return MPoly(self.ring, self._poly * other._poly)

    __rmul__ = __mul__

    def __neg__(self) -> 'MPoly':
        return MPoly(self.ring, -self._poly)

    def __pow__(self, exponent: int) -> 'MPoly':
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"MPoly exponent must be a nonnegative integer, got {exponent!r}")
        return MPoly(self.ring, self._poly ** exponent)

    def scale(self, factor) -> 'MPoly':
        factor = as_rational(factor)
        return MPoly(self.ring, self._poly * to_ground(factor))

    def exquo(self, other: 'MPoly') -> 'MPoly':
        """Exact quotient; DivisibilityError if other does not divide self."""
        other = self._coerce(other)
        if other.is_zero:
            raise DivisibilityError("Division by the zero polynomial", remainder=self)
        try:
            return MPoly(self.ring, self._poly.exquo(other._poly))
        except ExactQuotientFailed:
            _, remainder = self._poly.div(other._poly)
            raise DivisibilityError(
                f"{other} does not divide {self}", remainder=MPoly(self.ring, remainder)) from None

    # Calculus and substitution

    def diff(self, name: str = MAIN_VARIABLE) -> 'MPoly':
        gen = self.ring._ring.gens[self.ring.index(name)]
        return MPoly(self.ring, self._poly.diff(gen))

    def substitute(self, replacements: Mapping[str, 'MPoly']) -> 'MPoly':
        """Simultaneous substitution of indeterminates by polynomials."""
        if not replacements:
            return self
        pairs = []
        for name, value in replacements.items():
            value = self._coerce(value)
            pairs.append((self.ring._ring.gens[self.ring.index(name)], value._poly))
        return MPoly(self.ring, self._poly.compose(pairs))

    def evaluate(self, assignment: Mapping[str, object]) -> 'MPoly':
        """Substitute rational values for some indeterminates."""
        return self.substitute({name: self.ring.constant(value) for name, value in assignment.items()})

    def change_ring(self, ring: IndeterminateRing) -> 'MPoly':
        """Move to a ring holding every indeterminate this polynomial uses."""
        if ring == self.ring:
            return self
        positions = [ring.index(name) for name in self.ring.names if ring.has(name)]
        kept = [i for i, name in enumerate(self.ring.names) if ring.has(name)]
        terms = {}
        for monom, coeff in self._poly.items():
            if any(monom[i] for i, name in enumerate(self.ring.names) if not ring.has(name)):
                raise RingMismatchError(f"{self} uses indeterminates missing from {list(ring.names)}")
            target = [0] * ring.ngens
            for i, j in zip(kept, positions):
                target[j] = monom[i]
            terms[tuple(target)] = coeff
        return MPoly(ring, ring._ring.from_dict(terms))

    # Content

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        if self.is_zero:
            return Fraction(0)
        values = [from_ground(c) for c in self._poly.values()]
        numerator = reduce(int_gcd, (abs(v.numerator) for v in values))
        denominator = reduce(_lcm, (v.denominator for v in values))
        return Fraction(numerator, denominator)

    def primitive(self) -> Tuple[Fraction, 'MPoly']:
        """
        Split into (unit, primitive part).

        The primitive part has coprime integer coefficients and a positive
        graded-lex leading coefficient; unit * primitive == self.
        """
        if self.is_zero:
            return Fraction(1), self
        unit = self.content()
        if self.leading_coefficient < 0:
            unit = -unit
        return unit, self.scale(1 / unit)

    def integral(self) -> 'MPoly':
        """Clear coefficient denominators, keeping the integer content."""
        if self.is_zero:
            return self
        denominator = reduce(_lcm, (from_ground(c).denominator for c in self._poly.values()))
        return self.scale(denominator) if denominator != 1 else self

    # Comparison

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.ring == other.ring and self._poly == other._poly
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring.names, frozenset(self._poly.items())))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        return f"MPoly({self._poly})"

    def __str__(self) -> str:
        return str(self._poly)


def gcd_mpoly(a: MPoly, b: MPoly) -> MPoly:
    """
    Greatest common divisor of two polynomials over the integers.

    Both arguments are cleared of coefficient denominators first; the result
    keeps the common integer content and has a positive graded-lex leading
    coefficient. gcd(p, 0) is the cleared, sign-normalized p.

    Args:
        a: First polynomial
        b: Second polynomial in the same ring

    Returns:
        The normalized GCD
    """
    b = a._coerce(b)
    ring = a.ring
    if a.is_zero and b.is_zero:
        return ring.zero()
    if b.is_zero:
        return _sign_normalized(a.integral())
    if a.is_zero:
        return _sign_normalized(b.integral())

    a, b = a.integral(), b.integral()
    if a.is_constant or b.is_constant:
        numerator = int_gcd(_integer_content(a), _integer_content(b))
        return ring.constant(numerator)

    u = ring.ngens - 1
    f = dmp_from_dict({m: ZZ(int(from_ground(c).numerator)) for m, c in a._poly.items()}, u, ZZ)
    g = dmp_from_dict({m: ZZ(int(from_ground(c).numerator)) for m, c in b._poly.items()}, u, ZZ)
    h, _, _ = dmp_inner_gcd(f, g, u, ZZ)
    terms = {m: QQ(int(c)) for m, c in dmp_to_dict(h, u, ZZ).items()}
    return _sign_normalized(MPoly(ring, ring._ring.from_dict(terms)))


def gcd_many(polys: Iterable[MPoly]) -> MPoly:
    """Fold gcd_mpoly over a nonempty sequence; an empty one raises ValueError."""
    result = None
    for poly in polys:
        result = poly if result is None else gcd_mpoly(result, poly)
        if result.is_constant and not result.is_zero:
            break
    if result is None:
        raise ValueError("gcd_many needs at least one polynomial")
    return gcd_mpoly(result, result.ring.zero())


def lcm_mpoly(a: MPoly, b: MPoly) -> MPoly:
    """Least common multiple with positive graded-lex leading coefficient."""
    if a.is_zero or b.is_zero:
        return a.ring.zero()
    g = gcd_mpoly(a, b)
    return _sign_normalized((a.integral() * b.integral()).exquo(g))


def _integer_content(p: MPoly) -> int:
    return reduce(int_gcd, (abs(int(from_ground(c).numerator)) for c in p._poly.values()))


def _sign_normalized(p: MPoly) -> MPoly:
    if not p.is_zero and p.leading_coefficient < 0:
        return -p
    return p

