"""Exception types shared across the package."""


class ToynsError(Exception):
    """Base class for all package errors."""


class ConfigError(ToynsError):
    """Invalid or inconsistent configuration; message names the offending key."""


class NonFiniteFieldError(ToynsError):
    """A NaN/Inf appeared where a finite field is required."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class BlowUpError(ToynsError):
    """Solution exceeded the blow-up threshold or became non-finite."""

    def __init__(self, message, time, location, max_value):
        super().__init__(message)
        self.time = time
        self.location = location
        self.max_value = max_value


class UnderResolvedError(ToynsError):
    """Quadrature domain or analysis window too small for the grid."""


class CoverageError(ToynsError):
    """Snapshot sequence does not cover the requested space-time region."""


class NotRadialError(ToynsError):
    """Field failed the isotropy check required for radial extraction."""
