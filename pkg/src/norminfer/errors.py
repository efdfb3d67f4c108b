"""Exception hierarchy for the whole package."""


class NormInferError(Exception):
    """Base class for every error raised by norminfer."""


class NetworkDefinitionError(NormInferError):
    """A variable, CPT, or network violates a structural invariant."""


class UnknownVariableError(NormInferError):
    """A referenced variable is not declared in the network."""


class IncompleteAssignmentError(NormInferError):
    """A total assignment was required but some variable is unassigned."""


class ImpossibleEvidenceError(NormInferError):
    """The evidence has exactly zero probability under the network."""


class InsufficientSamplesError(NormInferError):
    """No forward samples were compatible with the evidence."""


class CalibrationMismatchError(NormInferError):
    """A parameter set does not match the keys a model structure requires."""


class QueryKeyFormatError(NormInferError):
    """A probability key does not follow the documented grammar."""


class RatingFileError(NormInferError):
    """A ratings file failed to load; the message carries the offending row."""


class AggregationError(NormInferError):
    """Rating records could not be aggregated (empty or mixed scenarios)."""


class UndefinedCorrelationError(NormInferError):
    """Pearson correlation is undefined because a series is constant."""


class DegenerateVarianceError(NormInferError):
    """A test statistic is undefined because the relevant variance is zero."""


class InsufficientPairsError(NormInferError):
    """Too few shared grid cells to correlate a model with the data."""
