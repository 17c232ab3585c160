"""
Pipeline Errors
"""


class PipelineError(Exception):
    """Base exception for pipeline runs"""
    pass


class ConfigurationError(PipelineError, ValueError):
    """Raised for invalid run configuration values or missing numeric assignments"""
    pass
