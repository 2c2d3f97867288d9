"""Exception types shared across the package."""


class CdError(Exception):
    """Base class for all errors raised by this package."""


class LengthMismatch(CdError):
    """Coefficient list length does not match 2**level."""


class NonFinite(CdError):
    """A coefficient is NaN or infinite."""


class LevelMismatch(CdError):
    """Binary operation applied to elements of different levels."""


class ZeroElement(CdError):
    """Operation requires a nonzero element."""


class NotPure(CdError):
    """Operation requires a pure imaginary element."""


class Overflow(CdError):
    """Result magnitude is not representable in double precision."""


class NoPrincipalDirection(CdError):
    """Negative real elements carry no principal imaginary direction."""


class NotInSlice(CdError):
    """Element does not lie in the requested complex slice."""


class OffSlice(CdError):
    """Polynomial argument is not complex-dependent with the slice direction."""


class OriginOnPath(CdError):
    """Winding-number path passes through (or too near) the origin."""


class AmbiguousWinding(CdError):
    """Turning number is not resolvable to an integer from the samples."""


class OpenCurve(CdError):
    """Winding-number samples do not form a closed loop."""


class NoConvergence(CdError):
    """Iterative solver exhausted its budget without meeting its tolerance."""
