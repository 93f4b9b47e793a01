"""Common base class for all solver errors raised by this package."""


class WinterresError(Exception):
    """Base class for domain errors (bad interaction data, solver failures)."""
