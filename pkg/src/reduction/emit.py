"""
Equation and Relation Emission

Renders equations, structure relations and common factors as plain text or
LaTeX. Plain text uses the expression-language syntax (`*`, `^`, `/`,
parentheses) and marks derivatives of P_{n+1} as P, P', P'', P''', P^(4):

    P'' - 2*x*P' + 2*(n+1)*P = 0

Each coefficient is grouped by powers of x; every group is written as its
rational content, then its primitive part over its reduced denominator,
then the power of x.
"""

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from algebra import MAIN_VARIABLE, MPoly, RatFun, XPoly, format_rational

from derivation import OdeResult, StructureRelation

from .reducer import ReducedOde


GREEK_LETTERS = frozenset({
    'alpha', 'beta', 'gamma', 'delta', 'epsilon', 'zeta', 'eta', 'theta',
    'iota', 'kappa', 'lambda', 'mu', 'nu', 'xi', 'pi', 'rho', 'sigma',
    'tau', 'upsilon', 'phi', 'chi', 'psi', 'omega',
})

FORMATS = ('text', 'latex')

Term = Tuple[bool, str]


class Renderer(ABC):
    """Layout rules shared by the output formats; subclasses supply the syntax."""

    name = "abstract"
    spaced_polynomials = True

    @abstractmethod
    def symbol(self, name: str) -> str:
        pass

    @abstractmethod
    def power(self, base: str, exponent: int) -> str:
        pass

    @abstractmethod
    def number(self, value: Fraction) -> str:
        pass

    @abstractmethod
    def product(self, factors: Sequence[str]) -> str:
        pass

    @abstractmethod
    def group(self, text: str) -> str:
        pass

    @abstractmethod
    def over(self, numerator: str, denominator: MPoly) -> str:
        pass

    @abstractmethod
    def scaled_by_power(self, coefficient: str, power: str, has_denominator: bool) -> str:
        pass

    @abstractmethod
    def derivative(self, order: int) -> str:
        pass

    @abstractmethod
    def label(self, name: str) -> str:
        pass

    # Polynomials

    def monomial(self, ring_names: Sequence[str], exponents: Sequence[int]) -> List[str]:
        return [self.power(self.symbol(name), e) for name, e in zip(ring_names, exponents) if e]

    def signed_terms(self, p: MPoly) -> List[Term]:
        terms = []
        for exponents, coeff in p.terms().items():
            factors = self.monomial(p.ring.names, exponents)
            magnitude = abs(coeff)
            if magnitude != 1 or not factors:
                factors.insert(0, self.number(magnitude))
            terms.append((coeff < 0, self.product(factors)))
        return terms

    def join(self, terms: Sequence[Term], spaced: bool = True) -> str:
        if not terms:
            return "0"
        minus, plus = (" - ", " + ") if spaced else ("-", "+")
        parts = []
        for i, (negative, body) in enumerate(terms):
            if i == 0:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"{minus}{body}" if negative else f"{plus}{body}")
        return "".join(parts)

    def compact(self, p: MPoly) -> str:
        return self.join(self.signed_terms(p), spaced=self.spaced_polynomials)

    def format_mpoly(self, p: MPoly) -> str:
        return self.compact(p)

    def scaled(self, unit: Fraction, primitive: MPoly) -> Term:
        """sign, then |unit|, then the primitive part (grouped when it has several terms)."""
        factors: List[str] = []
        if abs(unit) != 1:
            factors.append(self.number(abs(unit)))
        if not primitive.is_constant:
            body = self.compact(primitive)
            factors.append(self.group(body) if len(primitive.terms()) > 1 else body)
        return unit < 0, self.product(factors) if factors else self.number(Fraction(1))

    # Coefficients

    def xpoly_terms(self, p: XPoly) -> List[Term]:
        """One signed term per power of x, highest first."""
        if p.is_zero:
            return []
        den = p.value.den
        terms = []
        for k, coeff in sorted(p.value.num.coefficients_in(MAIN_VARIABLE).items(), reverse=True):
            group = RatFun.of(coeff, den)
            unit, primitive = group.num.primitive()
            negative, body = self.scaled(unit, primitive)
            has_den = not group.den.is_constant
            if has_den:
                body = self.over(body, group.den)
            if k:
                x_power = self.power(self.symbol(MAIN_VARIABLE), k)
                body = x_power if body == self.number(Fraction(1)) \
                    else self.scaled_by_power(body, x_power, has_den)
            terms.append((negative, body))
        return terms

    def format_xpoly(self, p: XPoly) -> str:
        return self.join(self.xpoly_terms(p))

    def format_ratfun(self, r: RatFun) -> str:
        if r.is_zero:
            return "0"
        unit, primitive = r.num.primitive()
        negative, body = self.scaled(unit, primitive)
        if not r.den.is_constant:
            body = self.over(body, r.den)
        return f"-{body}" if negative else body

    # Equations

    def equation(self, coeffs: Sequence[XPoly], order: int) -> str:
        items: List[Term] = []
        for i, coeff in enumerate(coeffs):
            terms = self.xpoly_terms(coeff)
            if not terms:
                continue
            mark = self.derivative(order - i)
            if len(terms) == 1:
                negative, body = terms[0]
                item = mark if body == self.number(Fraction(1)) else self.product([body, mark])
                items.append((negative, item))
            else:
                items.append((False, self.product([self.group(self.join(terms)), mark])))
        if not items:
            return "0 = 0"
        return f"{self.join(items)} = 0"

    def relation(self, rel: StructureRelation) -> str:
        return "\n".join(f"{self.label(name)} = {self.format_xpoly(value)}"
                         for name, value in rel.named_coefficients().items())


class TextRenderer(Renderer):
    """Plain text in the expression-language syntax."""

    name = "text"
    spaced_polynomials = False

    def symbol(self, name: str) -> str:
        return name

    def power(self, base: str, exponent: int) -> str:
        return base if exponent == 1 else f"{base}^{exponent}"

    def number(self, value: Fraction) -> str:
        return format_rational(value)

    def product(self, factors: Sequence[str]) -> str:
        return "*".join(factors)

    def group(self, text: str) -> str:
        return f"({text})"

    def over(self, numerator: str, denominator: MPoly) -> str:
        terms = denominator.terms()
        simple = len(terms) == 1 and next(iter(terms.values())) == 1
        den = self.compact(denominator)
        return f"{numerator}/{den if simple else self.group(den)}"

    def scaled_by_power(self, coefficient: str, power: str, has_denominator: bool) -> str:
        return self.product([self.group(coefficient) if has_denominator else coefficient, power])

    def derivative(self, order: int) -> str:
        return "P" + "'" * order if order < 4 else f"P^({order})"

    def label(self, name: str) -> str:
        return name


class LatexRenderer(Renderer):
    """LaTeX math-mode markup."""

    name = "latex"

    def symbol(self, name: str) -> str:
        if name in GREEK_LETTERS:
            return f"\\{name}"
        base, _, subscript = name.partition('_')
        if subscript:
            return f"{self.symbol(base)}_{{{subscript}}}"
        return name if len(name) == 1 else f"\\mathrm{{{name}}}"

    def power(self, base: str, exponent: int) -> str:
        return base if exponent == 1 else f"{base}^{{{exponent}}}"

    def number(self, value: Fraction) -> str:
        if value.denominator == 1:
            return str(value.numerator)
        return f"\\frac{{{value.numerator}}}{{{value.denominator}}}"

    def product(self, factors: Sequence[str]) -> str:
        return " ".join(factors)

    def group(self, text: str) -> str:
        return f"\\left({text}\\right)"

    def over(self, numerator: str, denominator: MPoly) -> str:
        return f"\\frac{{{numerator}}}{{{self.compact(denominator)}}}"

    def scaled_by_power(self, coefficient: str, power: str, has_denominator: bool) -> str:
        return self.product([coefficient, power])

    def derivative(self, order: int) -> str:
        if order == 0:
            return "P"
        if order < 4:
            return "P^{" + "\\prime" * order + "}"
        return f"P^{{({order})}}"

    def label(self, name: str) -> str:
        if name.startswith("Phi^"):
            return self.power("\\Phi", int(name[4:]))
        return f"{name[0]}_{{{name[1:]}}}"


_RENDERERS = {
    'text': TextRenderer,
    'latex': LatexRenderer,
}


def get_renderer(fmt: str) -> Renderer:
    try:
        return _RENDERERS[fmt]()
    except KeyError:
        raise ValueError(f"Unknown output format: {fmt!r}; expected one of {list(FORMATS)}") from None


Emittable = Union[OdeResult, ReducedOde, StructureRelation, XPoly, MPoly, RatFun]


def emit(obj: Emittable, fmt: str = 'text') -> str:
    """
    Render an equation, structure relation or coefficient.

    Args:
        obj: OdeResult, ReducedOde, StructureRelation, XPoly, MPoly or RatFun
        fmt: 'text' or 'latex'

    Returns:
        The rendered string; relations give one named coefficient per line
    """
    renderer = get_renderer(fmt)
    if isinstance(obj, (OdeResult, ReducedOde)):
        return renderer.equation(obj.coeffs, obj.order)
    if isinstance(obj, StructureRelation):
        return renderer.relation(obj)
    if isinstance(obj, XPoly):
        return renderer.format_xpoly(obj)
    if isinstance(obj, MPoly):
        return renderer.format_mpoly(obj)
    if isinstance(obj, RatFun):
        return renderer.format_ratfun(obj)
    raise TypeError(f"Cannot emit {type(obj).__name__}")


def format_coefficient(p: XPoly, fmt: str = 'text') -> str:
    return get_renderer(fmt).format_xpoly(p)
