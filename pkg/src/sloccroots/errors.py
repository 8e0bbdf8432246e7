"""Exception hierarchy.

Every error raised by the package derives from :class:`SloccError`, which is
itself a ``ValueError`` so callers validating input can catch either.
"""


class SloccError(ValueError):
    pass


class DimensionMismatch(SloccError):
    pass


class ZeroVector(SloccError):
    pass


class UnknownName(SloccError):
    pass


class MissingParams(SloccError):
    pass


class IndexOutOfRange(SloccError):
    pass


class SingularOperator(SloccError):
    pass


class IdenticallyZero(SloccError):
    """The pencil polynomial vanishes for every z (non-generic state)."""


class DegenerateTriple(SloccError):
    pass


class DegenerateConfiguration(SloccError):
    pass


class DegenerateLambda(SloccError):
    pass


class DegenerateRoots(SloccError):
    pass


class FourthPointMismatch(SloccError):
    pass


class NonGeneric(SloccError):
    pass


class ZeroTuple(SloccError):
    pass
