"""
Family Model Errors

Exception hierarchy for loading and validating Laguerre-Hahn family data.
"""


class FamilyError(Exception):
    """Base exception for family-model operations"""
    pass


class FamilySchemaError(FamilyError):
    """Raised when a family document does not conform to the schema"""
    pass


class CoverageError(FamilyError):
    """Raised when some index of a sequence's domain has no value"""

    def __init__(self, message: str, index: int = None):
        super().__init__(message)
        self.index = index


class OverlapError(FamilyError):
    """Raised when two branches of one sequence claim the same index"""
    pass


class IndexDomainError(FamilyError):
    """Raised for an index outside a sequence's domain"""
    pass
