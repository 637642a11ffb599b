"""Exception hierarchy shared by the cipher, key format and analysis code."""


class RBPBOError(Exception):
    """Base class for every error raised by this package."""


class DataError(RBPBOError):
    """Input data is well-formed at the I/O level but invalid for the operation."""


class CapacityExceeded(DataError):
    pass


class FieldOverflow(DataError):
    pass


class MalformedKey(DataError):
    pass


class LengthMismatch(DataError):
    pass


class TotalsMismatch(DataError):
    pass


class DegenerateInput(DataError):
    pass
