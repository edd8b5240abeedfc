"""Exception hierarchy shared by all modules."""


class AffgebraError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatch(AffgebraError, TypeError):
    pass


class FieldError(AffgebraError, ValueError):
    """Unsupported field descriptor (e.g. characteristic 2)."""


class DimensionMismatch(AffgebraError, ValueError):
    pass


class NotSquare(DimensionMismatch):
    pass


class ArityMismatch(AffgebraError, ValueError):
    pass


class InsufficientSamples(AffgebraError, ValueError):
    pass


class NotAffine(AffgebraError, ValueError):
    pass


class AlphaNotIdentity(AffgebraError, ValueError):
    pass


class PreconditionFailed(AffgebraError, ValueError):
    pass


class NotEndomorphism(PreconditionFailed):
    pass


class DataInvariantViolated(PreconditionFailed):
    pass


class AlphaNotMultiplicative(PreconditionFailed):
    pass


class AlphaIncompatible(PreconditionFailed):
    pass


class NotFixedPoint(PreconditionFailed):
    pass


class NotInDelta(PreconditionFailed):
    pass


class NotInPair17(PreconditionFailed):
    pass


class DataHomInvalid(PreconditionFailed):
    pass


class PsiNotInvertible(PreconditionFailed):
    pass


class PNotInvertible(PreconditionFailed):
    pass


class EmptyPairSpace(AffgebraError):
    pass


class ClosureFailure(AffgebraError):
    """A matrix operation left the sna subspace.

    ``witness`` holds the input matrices and the offending output.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InternalInconsistency(AffgebraError, AssertionError):
    """Two routes that must agree by theorem disagreed: a library bug."""
