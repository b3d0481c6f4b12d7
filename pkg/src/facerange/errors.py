"""Exception types shared across the package."""


class FaceRangeError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(FaceRangeError):
    """An input is outside the mathematical domain of an estimator."""


class EmptySetError(FaceRangeError):
    """An operation that needs at least one viewer got none."""


class ClockError(FaceRangeError):
    """A sample arrived with a non-increasing timestamp."""


class MalformedLogError(FaceRangeError):
    """An event log violates its ordering invariants."""


class OutOfFrameError(FaceRangeError):
    """A scene places a viewer outside what the camera can see."""


class TraceSpecError(FaceRangeError):
    """A synthetic-trace segment list is invalid (overlap or out of range)."""


class ConvergenceError(FaceRangeError):
    """A calibration search failed to bracket or converge."""


class AlignmentError(FaceRangeError):
    """A capture event has no detection frame within tolerance."""


class ConfigError(FaceRangeError):
    """An experiment or scene config file is invalid."""
