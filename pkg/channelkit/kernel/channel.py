"""
Channels over distributed systems.

A channel covers a system when its legs commute with the system's edges.
The minimal cover is the classification colimit; every other covering
channel is reached from it by a unique refinement (the mediator). Fusion
pushes each component logic along its leg and meets the results over the
core; flow queries ask whether one translated sequent entails another
inside the core's natural logic.
"""

import warnings
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple, Union

from ..core.errors import (
    DifferentSystemsError, IndexMismatchError, MalformedDiagramError, NotCommutingError,
    NotCoveringError, StructureMismatchError,
)
from ..data.classification import Infomorphism
from ..data.finset import SetFn
from ..data.logic import LocalLogic
from ..data.sequent import Sequent, StateDescription
from ..data.system import Channel, DistributedSystem
from ..environments.base import LogicalEnvironment
from ..environments.ifc import IFC
from ..utils.reporting import log
from . import cls
from .logic import dir_logic, fiber_meet


@dataclass(frozen=True)
class FlowCheck:
    """The entailment a flow query performed inside the core."""

    premise: Sequent
    conclusion: Sequent
    defeating_state: Optional[StateDescription] = None


@dataclass(frozen=True)
class FlowVerdict:
    carries: bool
    via: FlowCheck
    projection_warnings: Tuple[str, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.carries


def uncovered_edge(ch: Channel) -> Optional[str]:
    """Name of the first edge e : i → j with e ; leg_j ≠ leg_i."""
    for edge in ch.system.edges:
        via = edge.arrow.then(ch.legs[edge.dst])
        leg = ch.legs[edge.src]
        if via.type_map != leg.type_map or via.inst_map != leg.inst_map:
            return edge.name
    return None


def is_covering(ch: Channel) -> bool:
    return uncovered_edge(ch) is None


def require_covering(ch: Channel) -> None:
    edge = uncovered_edge(ch)
    if edge is not None:
        raise NotCoveringError(f"channel legs do not commute with edge {edge!r}", edge=edge)


def is_refinement(r: Infomorphism, c1: Channel, c2: Channel) -> bool:
    """r : core1 → core2 is valid and leg1_i ; r = leg2_i for every node."""
    if c1.system != c2.system:
        raise DifferentSystemsError("channels cover different systems")
    if r.source != c1.core or r.target != c2.core:
        raise StructureMismatchError("refinement must run from the first core to the second")
    if not cls.check_infomorphism(r):
        return False
    for node in c1.system.node_names:
        composite = c1.legs[node].then(r)
        if composite.type_map != c2.legs[node].type_map or composite.inst_map != c2.legs[node].inst_map:
            return False
    return True


def minimal_cover(system: DistributedSystem) -> Channel:
    """The colimiting channel of a system; a lone node is its own core."""
    if len(system) == 1 and not system.edges:
        (node, c), = system.items()
        return Channel(system, c, {node: Infomorphism.identity(c)})
    colimit = cls.cls_colimit(system)
    log(f"📡 minimal cover over {len(system)} nodes, {len(system.edges)} edges")
    return Channel(system, colimit.core, colimit.legs)


def mediator(minimal: Channel, other: Channel) -> Infomorphism:
    """The unique refinement from a minimal cover to another covering channel.

    Types are chased through the classes they belong to; each instance of
    the other core is sent to the tuple of its leg images.
    """
    if minimal.system != other.system:
        raise DifferentSystemsError("channels cover different systems")
    require_covering(other)

    types: Dict[str, str] = {}
    for node, c in minimal.system.items():
        for y in c.types:
            z = minimal.legs[node].type_map(y)
            image = other.legs[node].type_map(y)
            if types.setdefault(z, image) != image:
                raise NotCommutingError(
                    f"core type {z!r} would go to both {types[z]!r} and {image!r}", type=z, node=node
                )
    unreached = [z for z in minimal.core.types if z not in types]
    if unreached:
        raise MalformedDiagramError(f"core type {unreached[0]!r} is not reached by any leg; not a minimal cover")

    names = minimal.system.node_names
    tuple_of: Dict[Tuple[str, ...], str] = {}
    for x in minimal.core.instances:
        tuple_of.setdefault(tuple(minimal.legs[node].inst_map(x) for node in names), x)
    instances: Dict[str, str] = {}
    for w in other.core.instances:
        key = tuple(other.legs[node].inst_map(w) for node in names)
        if key not in tuple_of:
            raise NotCoveringError(f"instance {w!r} of the other core projects onto no compatible tuple")
        instances[w] = tuple_of[key]

    return Infomorphism.from_mappings(minimal.core, other.core, types, instances)


def _check_component_logics(ch: Channel, logics: Mapping[str, LocalLogic]) -> None:
    if set(logics) != set(ch.system.node_names):
        raise IndexMismatchError(
            f"component logics {sorted(logics)} do not match system nodes {sorted(ch.system.node_names)}"
        )
    for node, c in ch.system.items():
        if logics[node].structure != c:
            raise StructureMismatchError(f"logic for node {node!r} is not over that node's classification", node=node)


def fusion_logic(ch: Channel, logics: Mapping[str, LocalLogic], env: LogicalEnvironment = IFC) -> LocalLogic:
    """Direct image of every component logic along its leg, then their meet over the core."""
    require_covering(ch)
    _check_component_logics(ch, logics)
    images = [dir_logic(ch.legs[node], logics[node], env) for node in ch.system.node_names]
    if not images:
        return LocalLogic(ch.core.types, ch.core, env.theory(ch.core.types, ()))
    fused = fiber_meet(images, env)
    log(f"🧬 fused {len(images)} component logics into {len(fused.theory)} core sequents")
    return fused


def logic_colimit(system: DistributedSystem, logics: Mapping[str, LocalLogic],
                  env: LogicalEnvironment = IFC) -> Tuple[Channel, LocalLogic]:
    """Minimal cover of the system with the fusion of its component logics."""
    channel = minimal_cover(system)
    return channel, fusion_logic(channel, logics, env)


def factor_fusion(minimal: Channel, other: Channel, logics: Mapping[str, LocalLogic],
                  env: LogicalEnvironment = IFC) -> LocalLogic:
    """The minimal-cover fusion pushed along the mediator into the other core."""
    return dir_logic(mediator(minimal, other), fusion_logic(minimal, logics, env), env)


def _type_map(f: Union[Infomorphism, SetFn]) -> SetFn:
    return f.type_map if isinstance(f, Infomorphism) else f


def f_intro(f: Union[Infomorphism, SetFn], s: Sequent, env: LogicalEnvironment = IFC) -> Sequent:
    """Move a sequent forward along f; validity is preserved."""
    return env.translate(_type_map(f), s)


def f_elim_candidates(f: Union[Infomorphism, SetFn], s2: Sequent,
                      env: LogicalEnvironment = IFC) -> FrozenSet[Sequent]:
    """Every source sequent translating to ``s2``; nonvalidity is preserved."""
    return frozenset(env.preimages(_type_map(f), s2))


def binary_flow(p: Infomorphism, d: Infomorphism, s: Sequent,
                env: LogicalEnvironment = IFC) -> FrozenSet[Sequent]:
    """Along P →p C ←d D: introduce ``s`` into the core, then eliminate into D."""
    if p.target != d.target:
        raise StructureMismatchError("binary channel legs must share their core")
    return f_elim_candidates(d, f_intro(p, s, env), env)


def projection_warnings(ch: Channel, nodes: List[str]) -> Tuple[str, ...]:
    """Nodes whose leg does not make the core reduct isomorphic to the node."""
    flagged = []
    for node in dict.fromkeys(nodes):
        leg = ch.legs[node]
        if cls.cls_iso(cls.reduct(leg.type_map, ch.core), ch.system[node]) is None:
            flagged.append(node)
    return tuple(flagged)


def carries_info(ch: Channel, i: str, a_i: Sequent, j: str, a_j: Sequent,
                 env: LogicalEnvironment = IFC) -> FlowVerdict:
    """Does a_i holding at node i carry the information that a_j holds at node j?

    Decided as intent(core) ∪ {a_i translated} ⊢ a_j translated.
    """
    for node in (i, j):
        if node not in ch.system:
            raise IndexMismatchError(f"unknown node {node!r}", node=node)
    require_covering(ch)
    premise = env.translate(ch.legs[i].type_map, a_i)
    conclusion = env.translate(ch.legs[j].type_map, a_j)
    defeat = env.flow_counterexample(ch.core, [premise], conclusion)
    flagged = projection_warnings(ch, [i, j])
    for node in flagged:
        warnings.warn(f"leg {node!r} is not an iso-projection; the flow reading may not hold for that node")
    return FlowVerdict(defeat is None, FlowCheck(premise, conclusion, defeat), flagged)
