"""Exception hierarchy.

Everything raised on purpose derives from :class:`VolterraError`. Input
problems derive from :class:`ValidationError` (CLI exit code 2); broken
internal invariants raise :class:`InvariantViolation` (exit code 3).
"""


class VolterraError(Exception):
    pass


class ValidationError(VolterraError, ValueError):
    pass


class ParseError(ValidationError):
    pass


class NotSquare(ValidationError):
    pass


class NotSkewSymmetric(ValidationError):
    def __init__(self, i: int, j: int, message: str | None = None):
        self.pair = (i, j)
        super().__init__(message or f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) are not negatives of each other")


class EntryOutOfRange(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class InvalidFace(ValidationError):
    pass


class InvalidPoint(ValidationError):
    pass


class OddOrder(ValidationError):
    pass


class EvenOrder(ValidationError):
    pass


class OddSubset(ValidationError):
    pass


class NotTransversal(ValidationError):
    pass


class DimensionTooLarge(ValidationError):
    pass


class UnsupportedDimension(ValidationError):
    pass


class NotHomotopic(ValidationError):
    pass


class FaceTooLarge(ValidationError):
    pass


class ZeroEntry(ValidationError):
    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"entry a_{{{i + 1}{j + 1}}} is zero; the tournament is undefined")


class WitnessSearchFailed(VolterraError):
    """A deterministic search that must succeed did not; indicates a bug."""


class InvariantViolation(VolterraError):
    """Two independent computations disagreed."""
