"""Exception types shared across the package."""


class DelPezzoError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(DelPezzoError):
    """Two lattice classes living on different surfaces were combined."""


class NotARootError(DelPezzoError):
    """A reflection was requested in a class with self-intersection != -2."""


class ContractionError(DelPezzoError):
    """contract_last applied to a class meeting the last exceptional fiber."""


class ClassificationError(DelPezzoError):
    """A class does not match any exceptional-curve family pattern."""


class OrbitOverflowError(DelPezzoError):
    """Orbit enumeration exceeded its element cap."""


class NotInOrbitError(DelPezzoError):
    """word_to was asked for a target outside the seed's orbit."""


class ConfigError(DelPezzoError):
    """Malformed point configuration input."""


class SamplingError(DelPezzoError):
    """Random sampling failed to produce a valid object within the retry cap."""


class DegeneracyError(DelPezzoError):
    """A configuration turned out not general enough for an exact computation."""


class EvaluationError(DelPezzoError):
    """A torsor point was requested at a plane point lying on a section curve."""


class ModelMismatchError(DelPezzoError):
    """The Grassmannian minor model disagrees with the interpolated sections."""


class GenerationFailureError(DelPezzoError):
    """Degree-1 product sections failed to span a full section space."""


class CheckFailureError(DelPezzoError):
    """An internal consistency check failed at every sample point."""
