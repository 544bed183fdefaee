"""Exception hierarchy shared by every module."""


class MotzkinFlagsError(ValueError):
    """Base class for all validation failures raised by this package."""


class NotPrimeError(MotzkinFlagsError):
    pass


class DimensionMismatchError(MotzkinFlagsError):
    pass


class TypeMismatchError(MotzkinFlagsError):
    pass


class InvalidFlagError(MotzkinFlagsError):
    pass


class IndexedError(MotzkinFlagsError):
    """A validation error that points at a position (1-based) in its input."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class AlphabetError(IndexedError):
    pass


class NotAPathError(IndexedError):
    pass


class ImbalanceError(MotzkinFlagsError):
    pass


class LengthError(MotzkinFlagsError):
    pass


class DomainError(IndexedError):
    pass


class NotADistanceVectorError(IndexedError):
    pass


class NotDisjointError(MotzkinFlagsError):
    pass


class DuplicateFlagError(MotzkinFlagsError):
    pass


class UndefinedSetError(MotzkinFlagsError):
    pass
