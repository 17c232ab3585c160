"""
Test Exact Algebra

Exercises MPoly, RatFun and XPoly: worked examples, the error paths, and
seeded property suites over random polynomials in x, n and one parameter.
"""

import os
import random
import sys
from fractions import Fraction

import pytest

# Add the src directory to the Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from algebra import (
    DivisibilityError,
    IndeterminateRing,
    InvalidAffineError,
    MPoly,
    NotPolynomialInXError,
    RatFun,
    RingMismatchError,
    XPoly,
    ZeroDenominatorError,
    add,
    as_rational,
    d_dx,
    divide_exact,
    divmod_x,
    format_rational,
    gcd_many,
    gcd_mpoly,
    lcm_mpoly,
    mul,
    neg,
    scale,
    shift_index,
    subst_affine,
    theta_c,
    wronskian,
)
from expressions import evaluate_source


RING = IndeterminateRing(["a"])
INSTANCES = 500


def xp(source: str) -> XPoly:
    return evaluate_source(source, RING)


def mp(source: str) -> MPoly:
    value = xp(source).value
    assert value.den.is_constant
    return value.num


def random_mpoly(rng: random.Random, max_terms: int = 3, max_degree: int = 2) -> MPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        monom = tuple(rng.randint(0, max_degree) for _ in range(RING.ngens))
        terms[monom] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return MPoly.from_terms(RING, terms)


def nonzero_mpoly(rng: random.Random, **kwargs) -> MPoly:
    while True:
        p = random_mpoly(rng, **kwargs)
        if not p.is_zero:
            return p


DENOMINATORS = ["1", "n+1", "a+2", "2*n+a+1"]


def random_xpoly(rng: random.Random) -> XPoly:
    den = mp(rng.choice(DENOMINATORS))
    return XPoly(RatFun.of(random_mpoly(rng), den))


def nonzero_xpoly(rng: random.Random) -> XPoly:
    while True:
        p = random_xpoly(rng)
        if not p.is_zero:
            return p


# Rationals

def test_as_rational_accepts_exact_values():
    assert as_rational("3/4") == Fraction(3, 4)
    assert as_rational(" -2 ") == Fraction(-2)
    assert as_rational(5) == Fraction(5)
    assert as_rational(Fraction(1, 3)) == Fraction(1, 3)


@pytest.mark.parametrize("value", ["x", "1/0", "1.5", True, 0.5])
def test_as_rational_rejects_inexact_values(value):
    with pytest.raises(ValueError):
        as_rational(value)


def test_format_rational():
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(Fraction(6, 3)) == "2"


# Rings and polynomials

def test_ring_rejects_reserved_and_duplicate_names():
    with pytest.raises(ValueError):
        IndeterminateRing(["x"])
    with pytest.raises(ValueError):
        IndeterminateRing(["a", "a"])
    assert IndeterminateRing(["a"]) == RING
    assert IndeterminateRing(["b"]) != RING


def test_ring_mismatch_is_rejected():
    other = IndeterminateRing(["b"])
    with pytest.raises(RingMismatchError):
        RING.gen("x") + other.gen("x")


def test_exquo_reports_remainder():
    with pytest.raises(DivisibilityError) as excinfo:
        mp("x^2+1").exquo(mp("x"))
    assert excinfo.value.remainder == RING.one()


def test_gcd_of_known_factors():
    g = gcd_mpoly(mp("4*(x-n)*(x+a)"), mp("6*(x-n)*(x-1)"))
    assert g == mp("2*x-2*n")
    assert gcd_mpoly(mp("x+1"), RING.zero()) == mp("x+1")
    assert gcd_mpoly(mp("-3*x"), RING.zero()) == mp("3*x")
    assert gcd_many([mp("x^2-1"), mp("x^2+2*x+1"), mp("3*x+3")]) == mp("x+1")
    with pytest.raises(ValueError):
        gcd_many([])


def test_lcm_of_known_factors():
    assert lcm_mpoly(mp("x-1"), mp("x^2-1")) == mp("x^2-1")


def test_primitive_split():
    unit, primitive = mp("-4*x^2+6*n").primitive()
    assert unit == Fraction(-2)
    assert primitive == mp("2*x^2-3*n")


# Rational functions

def test_ratfun_normal_form():
    r = RatFun.of(mp("2*x^2-2"), mp("-4*x-4"))
    assert r.num == mp("-x+1").scale(Fraction(1, 2))
    assert r.den == RING.one()
    assert RatFun.of(mp("x"), mp("2*n+2")).den == mp("n+1")


def test_ratfun_zero_denominator():
    with pytest.raises(ZeroDenominatorError):
        RatFun.of(RING.one(), RING.zero())
    with pytest.raises(ZeroDenominatorError):
        RatFun.of(RING.one()) / RatFun.zero(RING)


def test_ratfun_index_shift():
    r = xp("1/(n+1)").value
    assert r.shift_index(1) == xp("1/(n+2)").value
    assert r.subs_index(2, 1) == xp("1/(2*n+2)").value


# Polynomials in x

def test_xpoly_rejects_x_in_denominator():
    with pytest.raises(NotPolynomialInXError):
        XPoly(RatFun.of(RING.one(), RING.gen("x")))


def test_xpoly_coefficients_by_power():
    p = xp("(n+1)*x^2 - a/(n+1)")
    assert p.degree == 2
    assert p.coeff(1).is_zero
    assert p.coeff(2) == xp("n+1").value
    assert p.coeff(0) == xp("-a/(n+1)").value


def test_theta_c_examples():
    assert xp("x^2-1").theta_c(1) == xp("x+1")
    assert xp("x^3").theta_c(0) == xp("x^2")
    assert xp("5").theta_c(2).is_zero


def test_divide_exact_reports_remainder():
    with pytest.raises(DivisibilityError) as excinfo:
        xp("x^2+1").divide_exact(xp("x"))
    assert excinfo.value.remainder == XPoly.one(RING)
    assert xp("x^2-n^2").divide_exact(xp("x+n")) == xp("x-n")


def test_operation_functions():
    p, q = xp("x^2 - n"), xp("x + a")
    assert add(p, q) == p + q
    assert mul(p, q) == p * q
    assert neg(p) == xp("n - x^2")
    assert scale(q, RatFun.of(mp("n"))) == xp("n*x + a*n")
    assert d_dx(p) == xp("2*x")
    assert divide_exact(mul(p, q), q) == p
    assert theta_c(p, 1) == xp("x + 1")
    assert subst_affine(q, 2, 1) == xp("2*x + 1 + a")
    assert shift_index(p, 1) == xp("x^2 - n - 1")


def test_divmod_x():
    q, r = divmod_x(xp("x^3+2*x+n"), xp("x^2+1"))
    assert q == xp("x")
    assert r == xp("x+n")


def test_subst_affine():
    assert xp("x^2").subst_affine(2, 1) == xp("4*x^2+4*x+1")
    with pytest.raises(InvalidAffineError):
        xp("x").subst_affine(0, 1)


def test_wronskian_example():
    assert wronskian(xp("x"), xp("x^2")) == xp("x^2")


def test_evaluate_never_substitutes_x():
    with pytest.raises(ValueError):
        xp("x+n").evaluate({"x": 1})
    assert xp("x+n*a").evaluate({"n": 2, "a": Fraction(1, 2)}) == xp("x+1")


# Property suites

def test_mpoly_ring_laws():
    """Commutativity, associativity and distributivity on random polynomials."""
    rng = random.Random(1201)
    for _ in range(INSTANCES):
        p, q, r = (random_mpoly(rng) for _ in range(3))
        assert p + q == q + p
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert (p - q) + q == p


def test_mpoly_exact_quotient_recovers_factor():
    rng = random.Random(1202)
    for _ in range(INSTANCES):
        p, q = random_mpoly(rng), nonzero_mpoly(rng)
        assert (p * q).exquo(q) == p


def test_gcd_divides_and_keeps_common_factor():
    rng = random.Random(1203)
    for _ in range(INSTANCES):
        p, q, r = (nonzero_mpoly(rng) for _ in range(3))
        a, b = p * r, q * r
        g = gcd_mpoly(a, b)
        assert not g.is_zero
        assert g.leading_coefficient > 0
        a.exquo(g)
        b.exquo(g)
        g.exquo(r.primitive()[1])


def test_ratfun_normal_form_is_canonical():
    """Equal quotients have identical normal forms."""
    rng = random.Random(1204)
    for _ in range(INSTANCES):
        p, q, r = nonzero_mpoly(rng), nonzero_mpoly(rng), nonzero_mpoly(rng)
        assert RatFun.of(p * r, q * r) == RatFun.of(p, q)
        assert RatFun.of(p, q).den.leading_coefficient > 0


def test_ratfun_field_laws():
    rng = random.Random(1205)
    for _ in range(INSTANCES):
        a = RatFun.of(random_mpoly(rng), nonzero_mpoly(rng))
        b = RatFun.of(nonzero_mpoly(rng), nonzero_mpoly(rng))
        assert (a + b) - b == a
        assert (a * b) / b == a
        assert a * b == b * a


def test_xpoly_product_rule():
    rng = random.Random(1206)
    for _ in range(INSTANCES):
        p, q = random_xpoly(rng), random_xpoly(rng)
        assert (p * q).d_dx() == p.d_dx() * q + p * q.d_dx()


def test_theta_c_reconstructs_polynomial():
    """p = (x - c) theta_c(p) + p(c)."""
    rng = random.Random(1207)
    x = XPoly.x(RING)
    for _ in range(INSTANCES):
        p = random_xpoly(rng)
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        assert (x - c) * p.theta_c(c) + XPoly(p.at(c)) == p


def test_subst_affine_is_multiplicative():
    rng = random.Random(1208)
    for _ in range(INSTANCES):
        p, q = random_xpoly(rng), random_xpoly(rng)
        a = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 2))
        b = Fraction(rng.randint(-3, 3))
        assert (p * q).subst_affine(a, b) == p.subst_affine(a, b) * q.subst_affine(a, b)


def test_divide_exact_recovers_factor():
    rng = random.Random(1209)
    for _ in range(INSTANCES):
        p, q = random_xpoly(rng), nonzero_xpoly(rng)
        assert (p * q).divide_exact(q) == p


def test_wronskian_is_antisymmetric():
    rng = random.Random(1210)
    for _ in range(INSTANCES):
        f, g = random_xpoly(rng), random_xpoly(rng)
        assert wronskian(f, g) == -wronskian(g, f)
