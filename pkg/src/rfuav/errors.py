"""Exception types shared across the package."""


class RfuavError(Exception):
    """Base class for all rfuav errors."""


# --- corpus ingestion ---

class MissingPairError(RfuavError):
    """A segment is present for one receiver half but not the other."""


class MalformedCsvError(RfuavError):
    """A CSV cell could not be parsed as a number."""

    def __init__(self, path, row, col, token):
        self.path = str(path)
        self.row = row
        self.col = col
        self.token = token
        super().__init__(
            f"{self.path}: non-numeric token {token!r} at row {row}, column {col}"
        )


class LabelError(RfuavError):
    """A segment id has no entry in the label manifest."""


class ProfileError(RfuavError):
    """A synthetic signal profile would generate a degenerate all-zero signal."""


# --- spectral processing ---

class DegenerateInputError(RfuavError):
    """Input signal too short to transform."""


class ZeroDenominatorError(RfuavError):
    """The boundary-bin sum used to normalize the upper half is zero."""


class HalfMismatchError(RfuavError):
    """Stitching requires one lower-half and one upper-half spectrum."""


# --- linear algebra / model plumbing ---

class DimensionError(RfuavError):
    """Array shape incompatible with the model or operation."""


class DegenerateDataError(RfuavError):
    """Data has zero total variance; nothing to decompose."""


class NonFiniteError(RfuavError):
    """A computation produced NaN or infinity."""


class StaleCacheError(RfuavError):
    """Forward-pass cache does not match the model it is being used with."""


# --- training ---

class InsufficientClassError(RfuavError):
    """A class has fewer members than the requested fold count."""


class NonFiniteLossError(RfuavError):
    """Training loss diverged to NaN or infinity."""

    def __init__(self, epoch, message=None):
        self.epoch = epoch
        super().__init__(message or f"non-finite loss at epoch {epoch}")


# --- explanation ---

class SubsetTooLargeError(RfuavError):
    """Exact Shapley enumeration requested for more features than tractable."""


class SingularFitError(RfuavError):
    """The weighted surrogate regression design is rank deficient."""


class EmptyInputError(RfuavError):
    """An aggregate was requested over an empty collection."""


# --- continuous authentication ---

class TerminalSessionError(RfuavError):
    """An authentication step was attempted on a revoked session."""


class StreamGapError(RfuavError):
    """The evidence stream produced nothing for a verification tick."""


# --- command line ---

class UsageError(RfuavError):
    """Unknown subcommand or malformed flags."""


class ConfigError(RfuavError):
    """A configuration value violates a precondition."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")
