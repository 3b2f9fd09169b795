"""Exception hierarchy shared by all modules."""


class TukeyDepthError(Exception):
    """Base class for every error raised by this package."""


class InputError(TukeyDepthError, ValueError):
    """Malformed or out-of-range input."""


class DegeneracyError(TukeyDepthError):
    """Input violates a general-position requirement."""


class RejectionLimitError(TukeyDepthError):
    """Random generation could not find a valid sample."""


class RealizationFailed(TukeyDepthError):
    """The constructive realizer could not produce a verified point set."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace
