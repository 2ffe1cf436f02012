"""Typed errors raised by the library.

Every failure mode a caller can reasonably branch on gets its own class;
all of them derive from ``SuperDSError`` so blanket handling stays easy.
"""


class SuperDSError(Exception):
    pass


class DimensionMismatch(SuperDSError):
    pass


class DuplicateLabel(SuperDSError):
    pass


class WeightArityMismatch(SuperDSError):
    pass


class NotDiagonal(SuperDSError):
    pass


class InvalidParams(SuperDSError):
    pass


class NotAnIdeal(SuperDSError):
    pass


class NotOdd(SuperDSError):
    pass


class NotHomogeneous(SuperDSError):
    """[u,u] does not act semisimply, so DS-type constructions are undefined."""


class IrrationalSpectrum(SuperDSError):
    """An eigenvalue or square root needed by an exact computation is not rational."""


class RankOutOfRange(SuperDSError):
    pass


class AlgebraMismatch(SuperDSError):
    pass


class NotSemisimpleAction(SuperDSError):
    pass


class NotDominant(SuperDSError):
    pass


class GradingViolation(SuperDSError):
    pass


class RepresentativeInconsistency(SuperDSError):
    """A map that should not depend on coset representatives did."""


class NotASubmodule(SuperDSError):
    pass


class NotInBracketImage(SuperDSError):
    pass


class NotToral(SuperDSError):
    pass


class NotStandardForm(SuperDSError):
    pass


class ImageMismatch(SuperDSError):
    pass


class NotSplit(SuperDSError):
    pass


class QuotientFailure(SuperDSError):
    pass


class SchemaViolation(SuperDSError):
    """Serialized data did not match the expected shape; message carries a JSON path."""
