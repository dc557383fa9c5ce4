"""Exception types raised by rot345."""


class Rot345Error(Exception):
    """Base class for all library errors."""


class DimensionError(Rot345Error, ValueError):
    """Unsupported dimension or mismatched operand shapes."""


class NotAntisymmetricError(Rot345Error, ValueError):
    pass


class NotRotationError(Rot345Error, ValueError):
    pass


class DegeneratePlaneError(Rot345Error, ValueError):
    """The two vectors do not span a two-plane."""


class NotSimpleError(Rot345Error, ValueError):
    """Generator or rotation does not act in a single two-plane."""


class BranchError(Rot345Error, ValueError):
    """Input lies on a special branch (angle 0 or pi) the formula excludes.

    ``branch`` names the branch the caller should use instead.
    """

    def __init__(self, message, branch):
        super().__init__(message)
        self.branch = branch


class ClassError(Rot345Error, ValueError):
    """A class-specific formula was called on input of another class."""
