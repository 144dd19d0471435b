"""Exception hierarchy shared by every module of the package."""


class FlagTchebError(Exception):
    """Base class for all errors raised by this package."""


class BadParameter(FlagTchebError, ValueError):
    pass


class GroundSetTooLarge(FlagTchebError, ValueError):
    pass


class FaceNotPresent(FlagTchebError, KeyError):
    pass


class NotAnEdge(FlagTchebError, ValueError):
    pass


class NotPure(FlagTchebError, ValueError):
    pass


class NotSymmetric(FlagTchebError, ValueError):
    pass


class OddDegree(FlagTchebError, ValueError):
    pass


class NotGraded(FlagTchebError, ValueError):
    pass


class NonBooleanIntervals(FlagTchebError, ValueError):
    pass


class BadOrder(FlagTchebError, ValueError):
    pass


class MixedComplexes(FlagTchebError, ValueError):
    pass


class CellVertexMismatch(FlagTchebError, ValueError):
    pass


class NotBalanced(FlagTchebError, ValueError):
    pass


class DimensionTooLarge(FlagTchebError, ValueError):
    pass


class NotAComplex(FlagTchebError, ValueError):
    pass


class BadPartition(FlagTchebError, ValueError):
    pass


class NotAnFVector(FlagTchebError, ValueError):
    pass


class IncompatibleDecompositions(FlagTchebError, ValueError):
    pass


class GammaMismatch(FlagTchebError, ValueError):
    pass


class UnknownSuite(FlagTchebError, KeyError):
    pass


class ConfigOutOfBounds(FlagTchebError, ValueError):
    pass


class ParseError(FlagTchebError, ValueError):
    pass
