"""
Exact Algebra Package

Exact rational arithmetic, sparse multivariate polynomials over the fixed
indeterminate ring {x, n} ∪ parameters, normalized rational functions and
polynomials in x over that fraction field.

## Usage

```python
from algebra import IndeterminateRing, XPoly

ring = IndeterminateRing(["tau", "lambda", "rho"])
x = XPoly.x(ring)
phi = x ** 3 - x
phi.d_dx()            # 3*x**2 - 1
```
"""

from .errors import (
    AlgebraError,
    RingMismatchError,
    ZeroDenominatorError,
    DivisibilityError,
    InvalidAffineError,
    NotPolynomialInXError,
)
from .rational import Rational, as_rational, format_rational
from .rings import (
    INDEX_VARIABLE,
    MAIN_VARIABLE,
    IndeterminateRing,
    MPoly,
    gcd_mpoly,
    gcd_many,
    lcm_mpoly,
)
from .ratfun import RatFun, as_ratfun
from .xpoly import XPoly, divmod_x, wronskian


def add(a: XPoly, b: XPoly) -> XPoly:
    return a + b


def mul(a: XPoly, b: XPoly) -> XPoly:
    return a * b


def neg(a: XPoly) -> XPoly:
    return -a


def scale(a: XPoly, r: RatFun) -> XPoly:
    return a.scale(r)


def d_dx(p: XPoly) -> XPoly:
    return p.d_dx()


def divide_exact(a: XPoly, b: XPoly) -> XPoly:
    return a.divide_exact(b)


def theta_c(p: XPoly, c) -> XPoly:
    return p.theta_c(c)


def subst_affine(p: XPoly, a, b) -> XPoly:
    return p.subst_affine(a, b)


def shift_index(f, k: int):
    """n -> n + k on a RatFun or XPoly."""
    return f.shift_index(k)


__all__ = [
    # Errors
    'AlgebraError',
    'RingMismatchError',
    'ZeroDenominatorError',
    'DivisibilityError',
    'InvalidAffineError',
    'NotPolynomialInXError',

    # Values
    'Rational',
    'IndeterminateRing',
    'MPoly',
    'RatFun',
    'XPoly',
    'MAIN_VARIABLE',
    'INDEX_VARIABLE',

    # Operations
    'as_rational',
    'as_ratfun',
    'format_rational',
    'add',
    'mul',
    'neg',
    'scale',
    'd_dx',
    'gcd_mpoly',
    'gcd_many',
    'lcm_mpoly',
    'divide_exact',
    'divmod_x',
    'theta_c',
    'subst_affine',
    'shift_index',
    'wronskian',
]
