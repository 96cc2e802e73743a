"""Exception types shared across the package."""


class DrivenWalkError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(DrivenWalkError):
    """Invalid or incomplete run configuration."""


class ScheduleExhaustedError(DrivenWalkError):
    """A tabulated phase schedule was asked for a step beyond its table."""


class SingularTimeError(DrivenWalkError):
    """The continuum kernel is undefined where the phase-cosine integral vanishes."""


class AccuracyError(DrivenWalkError):
    """An adaptive routine could not reach the requested tolerance.

    Carries the best available estimate and its error bound so callers can
    decide whether the partial result is still usable.
    """

    def __init__(self, message, estimate, error_bound):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound
