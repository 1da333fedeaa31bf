"""Exception types raised by gclose."""

from __future__ import annotations


class GCloseError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(GCloseError, ValueError):
    pass


class FieldMismatch(GCloseError, ValueError):
    pass


class NonAssociative(GCloseError, ValueError):
    """Raised when a structure-constant table fails associativity.

    ``witness`` holds the offending basis triple ``(i, j, k)``.
    """

    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        i, j, k = witness
        super().__init__(f"(u{i} u{j}) u{k} != u{i} (u{j} u{k})")


class BadUnit(GCloseError, ValueError):
    pass


class InvalidDegreeStructure(GCloseError, ValueError):
    pass


class CoefficientNotInBase(GCloseError, ValueError):
    pass


class AutomorphismOrderWrong(GCloseError, ValueError):
    pass


class NotAutomorphism(GCloseError, ValueError):
    pass


class WrongDegree(GCloseError, ValueError):
    pass


class WrongShape(GCloseError, ValueError):
    pass


class DimensionGuardExceeded(GCloseError):
    """Ambient dimension is above the configured cap."""

    def __init__(self, ambient: int, cap: int, what: str = "ambient space"):
        self.ambient = ambient
        self.cap = cap
        super().__init__(
            f"{what} has dimension {ambient} > cap {cap}; rerun with --force "
            "or raise the cap (GCLOSE_DIM_CAP / --cap)"
        )


class IdealNotStable(GCloseError):
    """Internal consistency failure: the ideal is not closed under an operator."""


class UnsupportedExtension(GCloseError, ValueError):
    pass


class SpecError(GCloseError, ValueError):
    """Malformed algebra or preset specification; message names the field."""


class InvalidPermutation(GCloseError, ValueError):
    pass
