"""Exception types raised by the enhancement and assessment routines."""


class MrRetinexError(Exception):
    """Base class for all package errors."""


class GeometryError(MrRetinexError, ValueError):
    """Image shape is not supported by the requested operation."""


class NonSquareOrIndivisible(GeometryError):
    pass


class IndivisibleDimensions(GeometryError):
    pass


class OddDimensions(GeometryError):
    pass


class DimensionMismatch(GeometryError):
    pass


class InvalidSigma(MrRetinexError, ValueError):
    pass


class UnknownFamily(MrRetinexError, ValueError):
    pass


class ZeroEnergyPlane(MrRetinexError, ValueError):
    """An all-zero plane has no defined energy percentages."""
