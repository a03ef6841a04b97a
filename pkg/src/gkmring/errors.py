"""Exception types raised across the package."""


class GKMError(Exception):
    """Base class for all errors raised by gkmring."""


class ZeroWeight(GKMError, ValueError):
    pass


class NotPrimitive(GKMError, ValueError):
    pass


class GroupTooLarge(GKMError):
    """Group closure exceeded the element bound (the group is probably infinite)."""


class UnknownVariable(GKMError, ValueError):
    pass


class ParseError(GKMError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NotInSpan(GKMError):
    """A class could not be written in terms of the given module generators."""


class RankMismatch(GKMError, ValueError):
    pass


class GroupActionMismatch(UserWarning):
    """The chosen coefficient ring does not act on the solution algebra."""
