"""Exception hierarchy for hyptile.

Every error raised on purpose by this package derives from HypTileError,
so callers can catch one base class.  The CLI maps subclasses to exit
codes (see cli.py).
"""


class HypTileError(Exception):
    """Base class for all hyptile errors."""


class DomainError(HypTileError, ValueError):
    """A parameter is outside the mathematical domain of the operation."""


class ClosureError(HypTileError):
    """Side/angle data does not close up into a polygon.

    Carries the translation and rotation residuals of the holonomy so
    callers can see *how far* from closing the data is.
    """

    def __init__(self, msg, point_residual=None, angle_residual=None):
        super().__init__(msg)
        self.point_residual = point_residual
        self.angle_residual = angle_residual


class GeometryError(HypTileError):
    """An operation produced (or received) geometrically invalid data,
    e.g. a self-intersecting polygon where a simple one is required."""


class DegeneracyError(HypTileError):
    """An operation would leave fewer than 3 effective vertices."""


class ConstructionError(HypTileError):
    """A numerical search for a closing side length failed.

    The message includes search diagnostics (range scanned, sample
    count, sign behaviour) so failures are debuggable.
    """


class InfeasibleError(HypTileError):
    """The requested combinatorial data admits no solution at all."""


class DataError(HypTileError):
    """Serialized input is internally inconsistent."""
