"""
Exception hierarchy for channelkit.

Every error raised by the kernel or the workspace loader derives from
ChannelKitError and carries the exit status the CLI should report.
"""

from typing import Any, Dict, Optional


class ChannelKitError(Exception):
    """Base class for all channelkit errors."""

    exit_code: int = 2
    kind: str = "error"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        """Structured payload used by machine-readable reports."""
        payload: Dict[str, Any] = {"kind": self.kind, "message": self.message}
        if self.details:
            payload["details"] = {k: _plain(v) for k, v in sorted(self.details.items())}
        return payload


def _plain(value: Any) -> Any:
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return str(value)


class UsageError(ChannelKitError):
    exit_code = 1
    kind = "usage"


class ValidationError(ChannelKitError):
    exit_code = 2
    kind = "validation"


class LanguageMismatchError(ValidationError):
    kind = "language_mismatch"


class StructureMismatchError(ValidationError):
    kind = "structure_mismatch"


class MalformedDiagramError(ValidationError):
    kind = "malformed_diagram"


class InvalidInfomorphismError(ValidationError):
    """Fundamental condition fails at a (target instance, source type) pair."""

    kind = "invalid_infomorphism"

    def __init__(self, message: str, instance: Optional[str] = None,
                 type_: Optional[str] = None, **details: Any):
        super().__init__(message, instance=instance, type=type_, **details)
        self.instance = instance
        self.type = type_


class InvalidTheoryMorphismError(ValidationError):
    kind = "invalid_theory_morphism"


class WellDefinednessError(ValidationError):
    kind = "well_definedness"


class NotCommutingError(ValidationError):
    kind = "not_commuting"


class NotCoveringError(ValidationError):
    kind = "not_covering"

    def __init__(self, message: str, edge: Optional[str] = None, **details: Any):
        super().__init__(message, edge=edge, **details)
        self.edge = edge


class IndexMismatchError(ValidationError):
    kind = "index_mismatch"


class DifferentSystemsError(ValidationError):
    kind = "different_systems"


class IllTypedProbeError(ValidationError):
    kind = "ill_typed_probe"


class WorkspaceParseError(ValidationError):
    kind = "parse_error"

    def __init__(self, message: str, line: Optional[int] = None,
                 column: Optional[int] = None, **details: Any):
        super().__init__(message, line=line, column=column, **details)
        self.line = line
        self.column = column


class DanglingReferenceError(ValidationError):
    kind = "dangling_reference"


class SequentOutOfLanguageError(ValidationError):
    kind = "sequent_out_of_language"


class NotInDomainError(ValidationError):
    """A name looked up in a finite set it does not belong to."""

    kind = "not_in_domain"


class CapExceededError(ChannelKitError):
    """A desk-scale bound was exceeded; raise the cap with the named flag."""

    exit_code = 3
    kind = "cap_exceeded"

    def __init__(self, cap: str, limit: int, requested: int, flag: Optional[str] = None):
        hint = f" (raise it with {flag})" if flag else ""
        super().__init__(
            f"{cap} cap exceeded: requested {requested}, limit {limit}{hint}",
            cap=cap, limit=limit, requested=requested, flag=flag,
        )
        self.cap = cap
        self.limit = limit
        self.requested = requested
        self.flag = flag
