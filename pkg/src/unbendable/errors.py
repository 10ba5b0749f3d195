"""Exception types raised by the library."""


class UnbendableError(ValueError):
    """Base class for validation errors."""


class InvalidRank(UnbendableError):
    pass


class IndexOutOfRange(UnbendableError):
    pass


class NotARoot(UnbendableError):
    pass


class CurveContracted(UnbendableError):
    """The curve C_alpha collapses to a point in G/P (n(alpha) == 0)."""


class NotLatticeWeight(UnbendableError):
    pass


class OutOfRange(UnbendableError):
    """Horospherical family parameters outside the classified range."""
