"""
Logical environments and their law checks.
"""

from .base import LogicalEnvironment
from .ifc import IFCEnvironment, IFC
from .laws import (
    LAWS, EnvironmentProbe, LawResult, EnvironmentLawReport, check_environment_laws
)

__all__ = [
    "LogicalEnvironment",
    "IFCEnvironment",
    "IFC",
    "LAWS",
    "EnvironmentProbe",
    "LawResult",
    "EnvironmentLawReport",
    "check_environment_laws",
]
