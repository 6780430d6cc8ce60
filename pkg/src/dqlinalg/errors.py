"""Exception types shared across the package."""


class DQLinAlgError(Exception):
    """Base class for all dqlinalg errors."""


class NonAppreciable(DQLinAlgError):
    """Operation needs an appreciable (nonzero standard part) operand."""


class DimensionMismatch(DQLinAlgError):
    """Operand shapes are incompatible."""


class Singular(DQLinAlgError):
    """Matrix is numerically singular (standard part rank deficient)."""


class InvalidProfile(DQLinAlgError):
    """Requested rank profile is impossible for the given shape."""


class ConvergenceFailure(DQLinAlgError):
    """An underlying iterative kernel failed to converge."""


class PairingFailure(DQLinAlgError):
    """The doubled spectrum of a complex embedding failed to pair up."""


class InconsistentResult(DQLinAlgError):
    """Recomputed quantities disagree with a stored decomposition result."""


class NonsingularityCertificationFailure(DQLinAlgError):
    """A transform promised nonsingular failed its numerical certificate."""


class UnknownExample(DQLinAlgError):
    """No built-in worked example with the requested identifier."""


class FormatError(DQLinAlgError):
    """A matrix or result file does not follow the documented format."""
