"""Exception hierarchy shared by every module."""


class FootruleError(ValueError):
    """Base class for input errors raised by this package."""


class EmptyInput(FootruleError):
    pass


class NotAPermutation(FootruleError):
    pass


class SizeMismatch(FootruleError):
    pass


class OddSize(FootruleError):
    pass


class EvenSize(FootruleError):
    pass


class InvalidM(FootruleError):
    pass


class UnknownBackend(FootruleError):
    pass


class SizeTooLarge(FootruleError):
    """Raised when a request exceeds a configured resource cap."""
