"""Exception types raised across the package."""

from __future__ import annotations


class HullEmbedError(Exception):
    """Base class for all errors raised by hullembed."""


class FieldError(HullEmbedError):
    pass


class FieldMismatch(FieldError, ValueError):
    """Operands live in different fields."""


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class ZeroArgument(FieldError, ValueError):
    pass


class NotAHermitianField(FieldError, ValueError):
    """Conjugation needs a field of square order (even extension degree)."""


class EvenCharacteristic(FieldError, ValueError):
    pass


class OddCharacteristic(FieldError, ValueError):
    pass


class NotASquare(FieldError, ValueError):
    pass


class NotInFixedSubfield(FieldError, ValueError):
    pass


class MatrixError(HullEmbedError):
    pass


class ShapeMismatch(MatrixError, ValueError):
    pass


class SingularMatrix(MatrixError, ValueError):
    pass


class NotSymmetric(MatrixError, ValueError):
    pass


class NotHermitianSymmetric(MatrixError, ValueError):
    pass


class RankDeficientGenerator(HullEmbedError, ValueError):
    pass


class TooLargeToEnumerate(HullEmbedError, ValueError):
    pass


class TOutOfRange(HullEmbedError, ValueError):
    pass


class AppendRejected(HullEmbedError, ValueError):
    """Manually supplied columns do not produce the requested hull dimension."""


class ParseError(HullEmbedError, ValueError):
    pass


class FixtureMismatch(HullEmbedError):
    pass
