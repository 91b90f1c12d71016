"""Exception hierarchy shared by every module.

The CLI reports ``type(err).__name__`` verbatim, so names are part of the
public interface.
"""


class RolleError(Exception):
    """Base class for domain errors raised by the library."""


class ParseError(RolleError, ValueError):
    def __init__(self, message, text="", position=0):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class NonConvergence(RolleError):
    """Iteration budget exhausted; ``partial`` holds the best available data."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class DerivativeVanishes(RolleError):
    pass


class DegreeTooLow(RolleError, ValueError):
    pass


class InvalidN(RolleError, ValueError):
    pass


class InvalidK(RolleError, ValueError):
    pass


class ZetaZero(RolleError, ValueError):
    pass


class SlackNonpositive(RolleError):
    pass


class ScaleOverflow(RolleError, OverflowError):
    """Coefficients would leave the double-precision range."""


class ExhaustedN(RolleError):
    pass


class ConstraintViolated(RolleError):
    pass


class NotInP(RolleError, ValueError):
    pass


class EpsilonTooLarge(RolleError, ValueError):
    pass


class CapExceeded(RolleError):
    pass
