"""
Derivation Errors

Exceptions raised while building structure relations and differential equations.
"""


class DerivationError(Exception):
    """Base exception for derivation operations"""
    pass


class SemiclassicalRequiredError(DerivationError):
    """Raised when a semiclassical reduction is requested for data with B != 0"""
    pass


class ClassicalRequiredError(DerivationError):
    """Raised when the classical equation is requested for non-classical data"""
    pass


class RSimpViolationError(DerivationError):
    """Raised when Phi does not divide the partial-sum identity; the family data is inconsistent"""

    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class BranchCoverageError(DerivationError):
    """Raised when a branch is not covered by the family's closed forms"""
    pass
