"""
Core modules for channelkit: configuration and the error hierarchy.

The command runner lives in core.engine and is re-exported from the
top-level package.
"""

from .config import ChannelKitConfig, get_config, use_config
from .errors import (
    ChannelKitError, UsageError, ValidationError,
    LanguageMismatchError, StructureMismatchError, MalformedDiagramError,
    InvalidInfomorphismError, InvalidTheoryMorphismError, WellDefinednessError,
    NotCommutingError, NotCoveringError, IndexMismatchError, DifferentSystemsError,
    IllTypedProbeError, WorkspaceParseError, DanglingReferenceError,
    SequentOutOfLanguageError, NotInDomainError, CapExceededError,
)

__all__ = [
    "ChannelKitConfig",
    "get_config",
    "use_config",
    "ChannelKitError",
    "UsageError",
    "ValidationError",
    "LanguageMismatchError",
    "StructureMismatchError",
    "MalformedDiagramError",
    "InvalidInfomorphismError",
    "InvalidTheoryMorphismError",
    "WellDefinednessError",
    "NotCommutingError",
    "NotCoveringError",
    "IndexMismatchError",
    "DifferentSystemsError",
    "IllTypedProbeError",
    "WorkspaceParseError",
    "DanglingReferenceError",
    "SequentOutOfLanguageError",
    "NotInDomainError",
    "CapExceededError",
]
