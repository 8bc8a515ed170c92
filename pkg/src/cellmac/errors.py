"""Exception types raised by cellmac.

Validation errors (complex construction) are distinguished from
precondition errors (calling an analysis on input outside its domain)
because the command line maps them to different exit codes.
"""


class CellmacError(Exception):
    """Base class for all cellmac errors."""


class InvalidComplexError(CellmacError):
    """A complex description failed structural validation."""


class MalformedInputError(InvalidComplexError):
    """A complex description file is not parseable into cells at all."""


class GradingError(InvalidComplexError):
    """Some cell has a facet whose dimension is not one lower."""


class IntersectionPropertyError(InvalidComplexError):
    """Two cells lack a unique maximal common face."""


class BoundaryNotSphereError(InvalidComplexError):
    """The proper faces of some cell do not form a sphere of the right dimension."""


class PreconditionError(CellmacError):
    """An operation was invoked outside its stated domain."""


class NonSimplicialError(PreconditionError):
    """A simplicial-only operation received a non-simplicial complex."""


class NotCohenMacaulayError(PreconditionError):
    """An operation requiring a Cohen-Macaulay complex received one that is not."""


class NotGorensteinStarError(PreconditionError):
    """An operation requiring a Gorenstein* complex received one that is not."""


class NonCommutingMorphismError(CellmacError):
    """Component maps of a square-free morphism fail to commute with multiplication."""
