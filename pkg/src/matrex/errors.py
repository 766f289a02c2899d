"""Exception types shared across the library.

The CLI maps these onto its exit codes, so library code should raise the
most specific type that applies.
"""


class MatrexError(Exception):
    """Base class for all library errors."""


class FormatError(MatrexError, ValueError):
    """A file or JSON document does not match the expected format."""


class ValidationError(MatrexError, ValueError):
    """Structurally well-formed input that violates a semantic precondition,
    e.g. an element id out of range or a set that is not a basis."""


class SizeLimitError(MatrexError, ValueError):
    """An enumeration gate (ground-size or brute-force cap) was exceeded."""


class GenerationError(MatrexError, RuntimeError):
    """Random instance generation exhausted its retry budget."""


class InternalVerificationError(MatrexError, RuntimeError):
    """A self-check on a computed result failed.

    This is never a user error: it means a bug slipped past input
    validation, and the computation aborts rather than returning a value
    that does not satisfy its own contract.
    """
