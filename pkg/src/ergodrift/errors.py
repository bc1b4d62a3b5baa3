"""Exception types raised by the library."""


class ErgodriftError(Exception):
    """Base class for all library-specific errors."""


class NonErgodicModel(ErgodriftError):
    """The model fails the ergodicity admissibility checks."""


class StepTooCoarse(ErgodriftError):
    """Simulation step violates the global step rule dt <= 1/(20 sqrt(T))."""


class StrideTooCoarse(ErgodriftError):
    """Subsampling stride violates the rule stride * dt <= 0.05."""


class GridTooNarrow(ErgodriftError):
    """An evaluation grid does not cover the required support."""


class ZeroLambda(ErgodriftError):
    """Operation undefined at frequency zero."""


class TimeHorizonTooSmall(ErgodriftError):
    """The horizon T is too small for a nonempty candidate grid."""


class EcfMismatch(ErgodriftError):
    """The characteristic-function table was built from a different path."""


class GridMismatch(ErgodriftError):
    """Two grids that must be compatible are not."""


class InsufficientPoints(ErgodriftError):
    """Too few data points for the requested fit."""
