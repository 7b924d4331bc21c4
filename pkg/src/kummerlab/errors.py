"""Exception hierarchy for the laboratory.

Every domain failure raises a subclass of KummerError carrying a short
machine-readable name (the class name) and, where useful, a payload dict
with exact witnesses (offending points, residuals, intervals).  The CLI
serializes these to JSON on stderr and exits 1; plain ValueError is used
for malformed requests that violate documented preconditions without a
named error in the contract.
"""


class KummerError(Exception):
    """Base class for domain errors."""

    def __init__(self, message="", **payload):
        super().__init__(message or self.__class__.__name__)
        self.payload = payload

    @property
    def name(self):
        return self.__class__.__name__


# projective kernel
class IdenticalLines(KummerError):
    pass


class DegeneratePoints(KummerError):
    pass


class PointNotOnConic(KummerError):
    pass


class SingularConic(KummerError):
    pass


class ZeroForm(KummerError):
    pass


class NestedExtension(KummerError):
    """A second independent square root would be required."""


# configuration building
class DuplicateParameter(KummerError):
    pass


class ConcurrentLines(KummerError):
    pass


class TangencyFailure(KummerError):
    pass


class NegativeInvariant(KummerError):
    pass


# locus scanning
class DegenerateSelection(KummerError):
    pass


class SelectionTouchesLine(KummerError):
    pass


class EmptyFamily(KummerError):
    pass


class NoSignChange(KummerError):
    pass


class DegenerateInside(KummerError):
    pass


# double cover
class OddDegree(KummerError):
    pass


class CurveInsideSextic(KummerError):
    pass


class SplitCover(KummerError):
    pass


# cycle lab
class CoincidentPoints(KummerError):
    pass


class RNotDistinct(KummerError):
    pass


class UnresolvedLink(KummerError):
    pass


class UnbalancedAtInfinity(KummerError):
    pass


class NonWeierstrassInput(KummerError):
    pass


class OnLocus(KummerError):
    """Cycle construction requested at a split-cover (Humbert locus) point."""


# enumerative
class DegenerateConditions(KummerError):
    pass


# serialization
class ParseError(KummerError):
    pass
