"""Shared exception types."""


class DecodeFailure(Exception):
    """Raised by bounded-distance decoders when no codeword lies within radius.

    ``stage`` identifies the step of a composite decoder that gave up
    (one of "intersection", "rs", "unlift", "inner") and is None for
    single-stage decoders.
    """

    def __init__(self, message: str, stage: str | None = None):
        super().__init__(message)
        self.stage = stage


class ScaleLimitError(RuntimeError):
    """Raised when an exhaustive operation would exceed the desk-scale guards."""
