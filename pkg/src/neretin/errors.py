"""Exception types shared across the package."""


class NeretinError(Exception):
    """Base class for every package-specific error."""


class ParseError(NeretinError):
    """A textual form (element DSL, cycle notation, word) is malformed."""

    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
        self.position = position


class DomainError(NeretinError):
    """A value violates a documented precondition."""


class BallNotRigidError(DomainError):
    """A ball evaluation was requested above the rigid region; refine first."""


class ResourceCapError(NeretinError):
    """An enumeration would exceed the configured resource cap."""
