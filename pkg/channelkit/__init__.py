"""
channelkit - information flow over classifications

Classifications, sequent theories and local logics in the IFC logical
environment; channels over distributed systems, colimit-based minimal
covers, fusion logics and flow queries, all decided exactly at desk scale.
"""

__version__ = "1.0.0"

from .core.config import ChannelKitConfig, get_config, use_config
from .core.errors import (
    ChannelKitError, UsageError, ValidationError, CapExceededError,
    LanguageMismatchError, StructureMismatchError, MalformedDiagramError,
    InvalidInfomorphismError, InvalidTheoryMorphismError, WellDefinednessError,
    NotCommutingError, NotCoveringError, IndexMismatchError, DifferentSystemsError,
    IllTypedProbeError, WorkspaceParseError, DanglingReferenceError,
    SequentOutOfLanguageError, NotInDomainError,
)
from .data import (
    FinSet, SetFn, Diagram, DiagramEdge, Sequent, Theory, StateDescription, parse_sequent,
    Classification, Infomorphism, LocalLogic, DistributedSystem, Channel,
    Workspace, WorkspaceLoader, WorkspaceWriter, load_workspace, dump_workspace,
)

# Kernel operations (setcat, cls and th first; logic and channel need the environment)
from .kernel.setcat import (
    Cocone, Cone, coproduct, set_colimit, set_limit, mediator_set, is_bijection,
)
from .kernel.cls import (
    satisfies, counterexample_instance, intent, reduct, check_infomorphism,
    infomorphism_violation, compose_infomorphisms, identity_infomorphism,
    structure_leq, is_flat_morphism, cls_colimit, cls_iso,
)
from .kernel.th import (
    TheoryMorphismWitness, row_satisfies, entails, defeating_state, models,
    closure, theory_leq, theory_equiv, sen_translate, dir_theory, inv_theory,
    is_theory_morphism, th_colimit,
)
from .environments import (
    LogicalEnvironment, IFCEnvironment, IFC, EnvironmentProbe, EnvironmentLawReport,
    check_environment_laws,
)
from .kernel.logic import (
    LogicMorphismWitness, natural_logic, is_sound, is_complete, soundness_witness,
    completeness_witness, is_logic_morphism, natural_logic_morphism, dir_logic, inv_logic,
    logic_leq, fiber_meet, fiber_join, soundness_unit, completeness_counit,
)
from .kernel.channel import (
    FlowCheck, FlowVerdict, is_covering, is_refinement, minimal_cover, mediator,
    fusion_logic, logic_colimit, factor_fusion, f_intro, f_elim_candidates,
    binary_flow, carries_info,
)
from .core.engine import ChannelKit, Report

__all__ = [
    "ChannelKit",
    "Report",
    "ChannelKitConfig",
    "get_config",
    "use_config",
    # Errors
    "ChannelKitError",
    "UsageError",
    "ValidationError",
    "CapExceededError",
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
    # Data
    "FinSet",
    "SetFn",
    "Diagram",
    "DiagramEdge",
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
    # Finite sets
    "Cocone",
    "Cone",
    "coproduct",
    "set_colimit",
    "set_limit",
    "mediator_set",
    "is_bijection",
    # Classifications
    "satisfies",
    "counterexample_instance",
    "intent",
    "reduct",
    "check_infomorphism",
    "infomorphism_violation",
    "compose_infomorphisms",
    "identity_infomorphism",
    "structure_leq",
    "is_flat_morphism",
    "cls_colimit",
    "cls_iso",
    # Theories
    "TheoryMorphismWitness",
    "row_satisfies",
    "entails",
    "defeating_state",
    "models",
    "closure",
    "theory_leq",
    "theory_equiv",
    "sen_translate",
    "dir_theory",
    "inv_theory",
    "is_theory_morphism",
    "th_colimit",
    # Environments
    "LogicalEnvironment",
    "IFCEnvironment",
    "IFC",
    "EnvironmentProbe",
    "EnvironmentLawReport",
    "check_environment_laws",
    # Logics
    "LogicMorphismWitness",
    "natural_logic",
    "is_sound",
    "is_complete",
    "soundness_witness",
    "completeness_witness",
    "is_logic_morphism",
    "natural_logic_morphism",
    "dir_logic",
    "inv_logic",
    "logic_leq",
    "fiber_meet",
    "fiber_join",
    "soundness_unit",
    "completeness_counit",
    # Channels
    "FlowCheck",
    "FlowVerdict",
    "is_covering",
    "is_refinement",
    "minimal_cover",
    "mediator",
    "fusion_logic",
    "logic_colimit",
    "factor_fusion",
    "f_intro",
    "f_elim_candidates",
    "binary_flow",
    "carries_info",
]
