"""
Configuration classes for channelkit.
"""

import json
import os
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Iterator, Mapping, Optional, Union

from .errors import UsageError

ENV_PREFIX = "CHANNELKIT_"


@dataclass(frozen=True)
class ChannelKitConfig:
    """Caps and output settings shared by the kernel and the CLI."""

    # Enumeration caps
    max_types: int = 16             # entailment: 2^|Σ| states
    max_closure_types: int = 8      # closure / intent / inverse image: 4^|Σ| sequents
    max_product: int = 10_000       # set_limit tuples
    max_iso_nodes: int = 1_000_000  # cls_iso search steps

    # Output settings
    output_format: str = "human"    # "human" or "machine"
    out: Optional[str] = None

    enable_logging: bool = False

    def __post_init__(self):
        if self.output_format not in ("human", "machine"):
            raise UsageError(f"unknown output format {self.output_format!r}")
        for name in ("max_types", "max_closure_types", "max_product", "max_iso_nodes"):
            if getattr(self, name) < 0:
                raise UsageError(f"{name} must be non-negative")

    def caps(self) -> Dict[str, int]:
        """Cap settings echoed into reports."""
        return {
            "max_types": self.max_types,
            "max_closure_types": self.max_closure_types,
            "max_product": self.max_product,
            "max_iso_nodes": self.max_iso_nodes,
        }

    def merged(self, overrides: Mapping[str, Any]) -> "ChannelKitConfig":
        """Return a copy with known keys replaced; unknown keys are ignored."""
        known = {f.name for f in fields(self)}
        values = {k: v for k, v in overrides.items() if k in known and v is not None}
        return replace(self, **values)

    @classmethod
    def from_json(cls, path: Union[str, Path], base: Optional["ChannelKitConfig"] = None) -> "ChannelKitConfig":
        """Load overrides from a JSON configuration file."""
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise UsageError(f"cannot read configuration file {path}: {e}")
        if not isinstance(data, dict):
            raise UsageError(f"configuration file {path} must hold an object")
        return (base or cls()).merged(data)

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None,
                 base: Optional["ChannelKitConfig"] = None) -> "ChannelKitConfig":
        """Apply CHANNELKIT_* environment variables on top of ``base``."""
        environ = os.environ if environ is None else environ
        overrides: Dict[str, Any] = {}
        for key, field_name, cast in _ENV_FIELDS:
            raw = environ.get(ENV_PREFIX + key)
            if raw is None or raw == "":
                continue
            try:
                overrides[field_name] = cast(raw)
            except ValueError:
                raise UsageError(f"invalid value for {ENV_PREFIX}{key}: {raw!r}")
        return (base or cls()).merged(overrides)


def _flag(raw: str) -> bool:
    return raw.strip().lower() in ("1", "true", "yes", "on")


_ENV_FIELDS = (
    ("MAX_TYPES", "max_types", int),
    ("MAX_CLOSURE_TYPES", "max_closure_types", int),
    ("MAX_PRODUCT", "max_product", int),
    ("MAX_ISO_NODES", "max_iso_nodes", int),
    ("FORMAT", "output_format", str),
    ("OUT", "out", str),
    ("VERBOSE", "enable_logging", _flag),
)


_ACTIVE: ContextVar[ChannelKitConfig] = ContextVar("channelkit_config", default=ChannelKitConfig())


def get_config() -> ChannelKitConfig:
    """The configuration in effect for the current context."""
    return _ACTIVE.get()


@contextmanager
def use_config(config: Optional[ChannelKitConfig] = None, **overrides: Any) -> Iterator[ChannelKitConfig]:
    """Scope a configuration (optionally with field overrides) to a block."""
    active = (config or get_config()).merged(overrides)
    token = _ACTIVE.set(active)
    try:
        yield active
    finally:
        _ACTIVE.reset(token)
