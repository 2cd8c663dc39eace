"""Exception hierarchy shared by every module."""


class LMEError(Exception):
    """Base class for all package errors."""


class ValidationError(LMEError, ValueError):
    pass


class TooFewSubsystems(ValidationError):
    pass


class InsufficientNontrivial(ValidationError):
    pass


class NonPositiveEntry(ValidationError):
    pass


class IndexOutOfRange(ValidationError, IndexError):
    pass


class DimOverflow(LMEError, OverflowError):
    """An exact quantity left the signed 128-bit range, or a tensor is too large."""


class NotCaseC(LMEError):
    """castle() was applied to a vector outside P/2 < d_n < P."""


class InternalInconsistency(LMEError, AssertionError):
    pass
