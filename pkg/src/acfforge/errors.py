"""Exception types shared across the pipeline, plus their CLI exit codes."""

from __future__ import annotations

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_BACKEND = 3
EXIT_INTERRUPTED = 4


class AcfForgeError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class InputError(AcfForgeError):
    """Bad caller input: malformed data, missing fields, broken preconditions."""

    exit_code = EXIT_VALIDATION


class EmptyInputError(InputError):
    pass


class MissingFieldError(InputError):
    pass


class MalformedEventError(InputError):
    pass


class NotApplicableError(InputError):
    """Requested an operation a corpus does not support (e.g. a question template for CompA-R)."""


class ShapeError(InputError):
    """Entry payload does not match what its corpus requires."""


class DuplicateIdError(InputError):
    pass


class CoverageError(InputError):
    """A manifest item has no matching verdict or metadata row."""


class CapacityError(InputError):
    """Sampling pool smaller than the requested volume."""


class ArityError(InputError):
    pass


class NumericError(InputError):
    pass


class ConfigError(InputError):
    pass


class ParseError(AcfForgeError):
    """Model output could not be turned into a typed value."""

    exit_code = EXIT_VALIDATION


class QuestionTypeError(ParseError):
    """Returned question type falls outside the mode's allowed space."""


class ConstraintError(ParseError):
    """Parsed value violates a generation constraint (e.g. temporal limits)."""


class ClassificationError(AcfForgeError):
    """Zero-AC judge output unparseable after retry."""

    exit_code = EXIT_VALIDATION


class TransportError(AcfForgeError):
    """Backend unreachable after exhausting retries."""

    exit_code = EXIT_BACKEND


class ProtocolError(AcfForgeError):
    """Backend answered with a non-success status or an unusable body."""

    exit_code = EXIT_BACKEND

    def __init__(self, message: str, status_code: int | None = None):
        super().__init__(message)
        self.status_code = status_code


class ReplayMissError(TransportError):
    """Replay tape has no entry for this request."""


class PipelineInterrupted(AcfForgeError):
    """A stage failed mid-run; the run can resume from the last durable manifest."""

    exit_code = EXIT_INTERRUPTED

    def __init__(self, stage: str, last_manifest: str | None, cause: Exception):
        super().__init__(f"stage '{stage}' interrupted: {cause}")
        self.stage = stage
        self.last_manifest = last_manifest
        self.cause = cause
