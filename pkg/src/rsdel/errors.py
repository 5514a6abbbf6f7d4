"""Exception types.

Plain field-arithmetic failures reuse the builtin ZeroDivisionError; everything
code-specific derives from RSDelError so callers can catch one base class.
"""


class RSDelError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(RSDelError, ValueError):
    """Invalid argument, code parameter, or file content."""


class FieldMismatchError(RSDelError, ValueError):
    """Two elements from different (p, g) contexts were combined."""


class DegenerateInterpolationError(RSDelError):
    """Interpolation was asked for two coinciding evaluation positions."""


class InconsistentReceivedWordError(RSDelError):
    """Received word cannot be the output of the deletion channel.

    Raised when exactly two of three symbols are equal (a degree-one codeword
    is either constant or injective on the evaluation points) or when the
    received word has the wrong length.
    """


class UnrecognizedReceivedWordError(RSDelError):
    """No kept-position triple is consistent with the received word."""


class BudgetExceededError(RSDelError):
    """An exhaustive certification would exceed its enumeration budget."""
