"""Exception hierarchy.  Every error raised by the library derives from ObkError."""


class ObkError(ValueError):
    pass


class DuplicateId(ObkError):
    pass


class DanglingSlot(ObkError):
    pass


class EmptyPresentation(ObkError):
    pass


class NotConnected(ObkError):
    pass


class NotOrientable(ObkError):
    pass


class ParseError(ObkError):
    pass


# patching
class UnknownDisk(ObkError):
    pass


class BandOutsideAttachingRegion(ObkError):
    pass


class SameHost(ObkError):
    pass


class NotSummable(ObkError):
    pass


# mapclass
class CycleNotInSpan(ObkError):
    pass


class SurfaceMismatch(ObkError):
    pass


class BasisEmbeddingMissing(ObkError):
    pass


# openbook / cobordism
class ClosedComponent(ObkError):
    pass


class AngleCollision(ObkError):
    pass


class BaseMismatch(ObkError):
    pass


class DegenerateCore(ObkError):
    pass


class CoreOrderViolation(ObkError):
    pass


class InvariantMismatch(ObkError):
    """Two pipelines that must agree did not.  Indicates a bug, not a math failure."""


# embedded
class SkewMismatch(ObkError):
    pass


class InvalidChord(ObkError):
    pass


class NotUnimodular(ObkError):
    pass


class NoCoreCycle(ObkError):
    pass


class DisconnectedSurface(ObkError):
    pass


# braid
class IndexOutOfRange(ObkError):
    pass


class NotHomogeneous(ObkError):
    pass


class MissingGenerator(ObkError):
    pass
