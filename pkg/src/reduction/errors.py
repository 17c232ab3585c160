"""
Reduction Errors
"""


class ReductionError(Exception):
    """Base exception for coefficient reduction"""
    pass


class DegenerateOdeError(ReductionError):
    """Raised when every coefficient of an equation vanishes; use the semiclassical reductions instead"""
    pass
