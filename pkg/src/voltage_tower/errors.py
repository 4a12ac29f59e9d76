"""Exception types shared across the package."""


class VoltageTowerError(Exception):
    """Base class for all errors raised by this library."""


class EmptyGraphError(VoltageTowerError):
    """Operation needs at least one vertex."""


class NotConnectedError(VoltageTowerError):
    """Operation needs a connected graph."""


class NotSquareError(VoltageTowerError):
    """Determinant of a non-square matrix."""


class TooLargeError(VoltageTowerError):
    """Input exceeds a hard cap of a brute-force oracle."""


class ZeroPolynomialError(VoltageTowerError):
    """Valuation data of the zero polynomial is undefined."""


class NonIntegralInterpolationError(VoltageTowerError):
    """Interpolated coefficients are not integers; the stated degree bound
    was violated."""


class InvalidPrimeError(VoltageTowerError):
    """Voltage modulus is not a prime."""


class NotAUnitError(VoltageTowerError):
    """Parameter is divisible by p where a unit is required."""


class NoTowerError(VoltageTowerError):
    """The graph admits no constant tower for this prime.

    ``reason`` is ``"acyclic"`` (the undirected image is a forest) or
    ``"zero-weight-gcd"`` (every cycle has weight 0).
    """

    def __init__(self, message: str, reason: str = "zero-weight-gcd"):
        super().__init__(message)
        self.reason = reason


class StructureViolationError(VoltageTowerError):
    """An identity guaranteed by the theory failed; this signals a bug,
    not a bad input."""


class InvalidSpecError(VoltageTowerError):
    """Malformed generator parameters."""


class DocumentError(VoltageTowerError):
    """Malformed JSON document."""
