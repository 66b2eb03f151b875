from __future__ import annotations


class RescosError(Exception):
    pass


class ConfigurationError(RescosError, ValueError):
    """Bad type label, parameter keys or other user input."""


class ResourceLimitError(RescosError):
    """A configured cap (orbit size, flat count, subset count) was exceeded.

    ``partial`` carries whatever was computed before giving up, e.g. the
    enumeration frontier.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class VerificationError(RescosError):
    """A proved property failed on computed data; carries a counterexample."""

    def __init__(self, message: str, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class DomainError(RescosError, ValueError):
    pass


class ContourError(RescosError, ValueError):
    """A quadrature contour meets or encloses a pole it must avoid."""
