"""Shared exception types."""


class ConfigError(ValueError):
    """A configuration value violates its contract (bad split size, empty corpus, ...)."""


class DatasetError(ValueError):
    """A dataset file is unreadable or a line is malformed; message names file and line."""


class ModelFormatError(ValueError):
    """A model artifact failed to load: bad version, shape mismatch, or non-finite value."""


class TrainingDivergedError(RuntimeError):
    """Training hit a non-finite loss; message names the epoch and batch."""


class ProtocolError(RuntimeError):
    """A framing violation on the message stream (truncated, zero-length, or oversized frame)."""
