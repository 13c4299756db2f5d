"""Exception types shared by every module of the package."""


class DuoidalError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(DuoidalError, ValueError):
    """Raised when two linear maps or spaces do not fit together."""


class InvalidPermutation(DuoidalError, ValueError):
    """Raised when a leg permutation is not a bijection on factor indices."""


class MalformedInstance(DuoidalError, ValueError):
    """Raised when structure constants have inconsistent shapes.

    ``location`` is a dotted path into the offending data (for example
    ``"bialgebra.mul[2]"``) so front ends can point at the problem.
    """

    def __init__(self, message, location=""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location
        self.message = message


class PrerequisiteFailed(DuoidalError):
    """Raised when an operation's precondition check does not pass.

    The failing report, if any, is attached as ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
