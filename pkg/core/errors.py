"""
Exception hierarchy for bodies of evidence, distributions and searches.

Every error is a ValueError so callers that only care about bad input can
catch that; the CLI catches EvidenceError and maps it to exit code 1.
"""

from typing import Any, Dict, Optional


class EvidenceError(ValueError):
    """Base error carrying a context dict for logging and diagnostics"""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.context = context or {}

    def diagnostic(self) -> str:
        """One-line message naming the failure and the offending entry"""
        if not self.context:
            return f"{type(self).__name__}: {self.message}"
        details = ", ".join(f"{key}={value!r}" for key, value in self.context.items())
        return f"{type(self).__name__}: {self.message} ({details})"


# Body validation
class EmptyFocalSet(EvidenceError):
    pass


class UnknownElement(EvidenceError):
    pass


class MassOutOfRange(EvidenceError):
    pass


class NotNormalized(EvidenceError):
    pass


class FrameTooLarge(EvidenceError):
    pass


class InvalidFrame(EvidenceError):
    pass


class DuplicateFocalSet(EvidenceError):
    pass


# Measures and joins
class NotAFocalSet(EvidenceError):
    pass


class NotAProductFrame(EvidenceError):
    pass


class SizeMismatch(EvidenceError):
    pass


# Possibility theory
class InvalidDistribution(EvidenceError):
    pass


class BadResolution(EvidenceError):
    pass


class SizeOutOfRange(EvidenceError):
    pass


# Families
class BadDivisibility(EvidenceError):
    pass


class BadCardinality(EvidenceError):
    pass


# Explorer
class TooManyFocalSets(EvidenceError):
    pass


# Documents
class DocumentError(EvidenceError):
    """Body or distribution document could not be parsed"""
