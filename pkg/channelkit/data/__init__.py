"""
Data structures: finite sets, diagrams, classifications, sequents,
logics, systems and workspace documents.
"""

from .finset import FinSet, SetFn
from .diagram import Diagram, DiagramEdge, discrete
from .sequent import Sequent, Theory, StateDescription, parse_sequent
from .classification import Classification, Infomorphism
from .logic import LocalLogic
from .system import DistributedSystem, Channel
from .workspace import (
    Workspace, WorkspaceLoader, WorkspaceWriter, load_workspace, dump_workspace, SECTIONS
)

__all__ = [
    "FinSet",
    "SetFn",
    "Diagram",
    "DiagramEdge",
    "discrete",
    "Sequent",
    "Theory",
    "StateDescription",
    "parse_sequent",
    "Classification",
    "Infomorphism",
    "LocalLogic",
    "DistributedSystem",
    "Channel",
    "Workspace",
    "WorkspaceLoader",
    "WorkspaceWriter",
    "load_workspace",
    "dump_workspace",
    "SECTIONS",
]
