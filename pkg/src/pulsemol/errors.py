"""Exception hierarchy shared across the package."""


class PulsemolError(Exception):
    """Base class for all package errors."""


class NotHermitianError(PulsemolError):
    """Matrix violates the Hermitian symmetry required by the operation."""


class DimMismatchError(PulsemolError):
    """Operands have incompatible dimensions."""


class DimNotPowerOfTwoError(PulsemolError):
    """Matrix dimension is not 2**q for any integer q."""


class LengthMismatchError(PulsemolError):
    """Parameter vector length does not match the template slot count."""


class TargetTooSmallError(PulsemolError):
    """Padding target is shorter than the schedule it should extend."""


class TopologyMismatchError(PulsemolError):
    """Device topology does not fit the requested schedule template."""


class FrameUnsupportedError(PulsemolError):
    """Requested frame is not defined for this device."""


class InvalidDensityError(PulsemolError):
    """Density matrix is not positive semidefinite with unit trace."""


class ParseError(PulsemolError):
    """Input file could not be parsed; message carries position info."""


class ValidationError(PulsemolError):
    """Parsed input violates a model invariant; message names it."""


class UnknownNameError(PulsemolError):
    """No builtin object is registered under the requested name."""


class NonFiniteObjectiveError(PulsemolError):
    """Objective returned NaN or infinity."""


class NotReachedError(PulsemolError):
    """Search exhausted its budget without hitting the accuracy target."""

    def __init__(self, max_bins, message=None):
        self.max_bins = max_bins
        super().__init__(message or f"target accuracy not reached within {max_bins} bins")


class DegenerateTrajectoryError(PulsemolError):
    """Both time-averaged energy scales vanish; no finite bound exists."""
