"""Exception hierarchy shared by all modules."""


class TropRealError(ValueError):
    """Base class for validation failures on user-supplied data."""


class FieldMismatch(TropRealError):
    pass


class InvalidCharacteristic(TropRealError):
    pass


class RankDeficient(TropRealError):
    pass


class LoopyMatroid(TropRealError):
    pass


class NotABasis(TropRealError):
    pass


class NotNormalized(TropRealError):
    pass


class Unbalanced(TropRealError):
    pass


class ParallelRays(TropRealError):
    pass


class ZeroVector(TropRealError):
    pass


class RayOutsideFan(TropRealError):
    pass


class DegreeMismatch(TropRealError):
    pass


class CharNotZero(TropRealError):
    pass


class NotRealizable(TropRealError):
    pass


class InvalidNormal(TropRealError):
    pass


class PolyParseError(TropRealError):
    pass


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; this signals a bug, not bad input."""
