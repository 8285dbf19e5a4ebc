"""Exception types shared across the package."""
from __future__ import annotations


class MsquaredError(Exception):
    """Base class for all package errors."""


class NotPrime(MsquaredError, ValueError):
    pass


class CharTwoDisallowed(MsquaredError, ValueError):
    pass


class OutOfRange(MsquaredError, ValueError):
    pass


class DimensionMismatch(MsquaredError, ValueError):
    pass


class TooLarge(MsquaredError):
    """Raised by size guards instead of running an infeasible computation."""


class BadParams(MsquaredError, ValueError):
    pass


class Disconnected(MsquaredError, ValueError):
    pass


class CoverInvalid(MsquaredError, ValueError):
    pass


class WitnessInvalid(MsquaredError, ValueError):
    pass


class NotArtinian(MsquaredError, ValueError):
    pass
