"""
Algebra Errors

Exception hierarchy raised by the exact-algebra kernel.
"""


class AlgebraError(Exception):
    """Base exception for exact-algebra operations"""
    pass


class RingMismatchError(AlgebraError):
    """Raised when operands live in different indeterminate rings"""
    pass


class ZeroDenominatorError(AlgebraError, ZeroDivisionError):
    """Raised when a rational function would get a zero denominator"""
    pass


class DivisibilityError(AlgebraError):
    """Raised when an exact division leaves a nonzero remainder"""

    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class InvalidAffineError(AlgebraError):
    """Raised for an affine substitution x -> a*x + b with a = 0"""
    pass


class NotPolynomialInXError(AlgebraError):
    """Raised when a value expected to be polynomial in x has x in its denominator"""
    pass
