"""
Oracle Errors
"""


class OracleError(Exception):
    """Base exception for numeric verification"""
    pass


class RegularityError(OracleError):
    """Raised when gamma_n vanishes, or a sequence value is undefined, in the working range"""
    pass


class BranchMismatchError(OracleError):
    """Raised when an equation is checked at an index its branch does not cover"""
    pass
