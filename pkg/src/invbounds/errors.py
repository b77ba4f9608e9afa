"""Exception hierarchy shared by all invbounds modules."""


class InvBoundsError(Exception):
    """Base class for every error raised by this package."""


class ResourceLimit(InvBoundsError):
    """A search exceeded its node budget before terminating."""


class DimensionMismatch(InvBoundsError, ValueError):
    pass


class LatticeMismatch(InvBoundsError, ValueError):
    pass


class UnassignedBasisVector(InvBoundsError, KeyError):
    pass


class UnsupportedBasisKind(InvBoundsError, TypeError):
    pass


class MissingNorms(InvBoundsError, ValueError):
    pass


class BrokenChain(InvBoundsError):
    """A lower-bound chain was requested from unverified ingredients."""


class ScalarConstraintViolated(InvBoundsError, ValueError):
    pass
