"""
Satisfaction, intent, reducts, the structure order and classification colimits.
"""

from typing import Dict, NamedTuple, Optional

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import GraphMatcher

from ..core.config import get_config
from ..core.errors import (
    CapExceededError, InvalidInfomorphismError, LanguageMismatchError, WellDefinednessError,
)
from ..data.classification import Classification, Infomorphism
from ..data.diagram import Diagram
from ..data.finset import FinSet, SetFn
from ..data.sequent import Sequent, Theory
from ..utils import bitsets
from ..utils.reporting import log
from .setcat import Cocone, Cone, set_colimit, set_limit
from .th import _sequents_from

ClsDiagram = Diagram  # Diagram[Classification, Infomorphism]


class ClassificationColimit(NamedTuple):
    core: Classification
    legs: Dict[str, Infomorphism]
    type_cocone: Cocone
    instance_cone: Cone


class ClassificationIso(NamedTuple):
    instance_map: SetFn
    type_map: SetFn


def _same_language(expected: FinSet, actual: FinSet, what: str) -> None:
    if expected != actual:
        raise LanguageMismatchError(f"{what}: expected language {expected}, got {actual}")


def counterexample_instance(m: Classification, q: Sequent) -> Optional[str]:
    """First instance whose row satisfies all of Γ and none of Δ.

    Read straight off the incidence columns, so no language size is too big.
    """
    _same_language(m.types, q.language, "satisfies")
    gamma = [m.types.index(y) for y in q.gamma]
    delta = [m.types.index(y) for y in q.delta]
    bad = np.flatnonzero(m.incidence[:, gamma].all(axis=1) & ~m.incidence[:, delta].any(axis=1))
    return m.instances.elements[bad[0]] if len(bad) else None


def satisfies(m: Classification, q: Sequent) -> bool:
    return counterexample_instance(m, q) is None


def satisfies_theory(m: Classification, t: Theory) -> bool:
    _same_language(m.types, t.language, "satisfies")
    return all(satisfies(m, q) for q in t.sequents)


def intent(m: Classification) -> Theory:
    """Every sequent over the type set that the classification satisfies."""
    n = len(m.types)
    bitsets.require_types(n, "max_closure_types")
    gammas, deltas = bitsets.sequent_pairs(n)
    keep = bitsets.satisfied_pairs(m.row_masks(), gammas, deltas)
    return _sequents_from(m.types, gammas[keep], deltas[keep])


def reduct(sigma: SetFn, n: Classification) -> Classification:
    """Structure translation along σ: x ⊨ y iff x ⊨_n σ(y)."""
    _same_language(sigma.target, n.types, "reduct")
    columns = [n.types.index(z) for z in sigma.images]
    return Classification(n.instances, sigma.source, n.incidence[:, columns])


def check_infomorphism(f: Infomorphism) -> bool:
    return f.violation() is None


def infomorphism_violation(f: Infomorphism):
    return f.violation()


def compose_infomorphisms(f: Infomorphism, g: Infomorphism) -> Infomorphism:
    return f.then(g)


def identity_infomorphism(m: Classification) -> Infomorphism:
    return Infomorphism.identity(m)


def structure_leq(m1: Classification, m2: Classification) -> bool:
    """M1 ≤ M2 when intent(M1) ⊇ intent(M2).

    Decided on row sets: each state is cut out by its characteristic sequent
    (s ⊢ Σ∖s), so intent(M1) ⊇ intent(M2) iff rows(M1) ⊆ rows(M2).
    """
    _same_language(m1.types, m2.types, "structure_leq")
    return m1.row_set() <= m2.row_set()


def is_flat_morphism(sigma: SetFn, m1: Classification, m2: Classification) -> bool:
    """σ preserves constraints from m1 to m2: struc(σ)(m2) ≤ m1."""
    _same_language(sigma.source, m1.types, "is_flat_morphism source")
    _same_language(sigma.target, m2.types, "is_flat_morphism target")
    return structure_leq(reduct(sigma, m2), m1)


def validate_cls_diagram(d: Diagram) -> None:
    d.check_endpoints(lambda f: f.source, lambda f: f.target)
    for edge in d.edges:
        bad = edge.arrow.violation()
        if bad is not None:
            instance, type_ = bad
            raise InvalidInfomorphismError(
                f"edge {edge.name!r} breaks the fundamental condition at instance {instance!r}, type {type_!r}",
                instance=instance, type_=type_, edge=edge.name,
            )


def cls_colimit(d: Diagram) -> ClassificationColimit:
    """Colimit of a diagram of classifications.

    Types: colimit of the type diagram. Instances: limit of the instance
    diagram, whose edges run backwards. A tuple is of a class iff each
    component is of the corresponding member types.
    """
    validate_cls_diagram(d)
    type_cocone = set_colimit(d.map_nodes(lambda c: c.types, lambda f: f.type_map))
    instance_cone = set_limit(d.map_nodes(lambda c: c.instances, lambda f: f.inst_map, reverse=True))

    core_types = type_cocone.apex
    incidence = np.zeros((len(instance_cone.tuples), len(core_types)), dtype=bool)
    assigned = np.zeros(len(core_types), dtype=bool)
    for k, (node, c) in enumerate(d.items()):
        column_of = [core_types.index(z) for z in type_cocone.legs[node].images]
        rows = [c.instances.index(t[k]) for t in instance_cone.tuples]
        block = c.incidence[rows, :] if rows else np.zeros((0, len(c.types)), dtype=bool)
        for j, col in enumerate(column_of):
            if assigned[col] and not np.array_equal(incidence[:, col], block[:, j]):
                raise WellDefinednessError(
                    f"core type {core_types.elements[col]!r} is not well defined on node {node!r}",
                    type=core_types.elements[col], node=node,
                )
            incidence[:, col] = block[:, j]
            assigned[col] = True

    core = Classification(instance_cone.apex, core_types, incidence)
    legs = {
        node: Infomorphism(c, core, type_cocone.legs[node], instance_cone.legs[node])
        for node, c in d.items()
    }
    log(f"🌐 classification colimit: {len(core.types)} types, {len(core.instances)} instances")
    return ClassificationColimit(core, legs, type_cocone, instance_cone)


def _incidence_graph(m: Classification) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from((("i", x) for x in m.instances), side="instance")
    g.add_nodes_from((("t", y) for y in m.types), side="type")
    g.add_edges_from((("i", m.instances.elements[i]), ("t", m.types.elements[j]))
                     for i, j in np.argwhere(m.incidence))
    return g


class _CappedMatcher(GraphMatcher):
    """VF2 matcher that counts candidate pairs and stops at the search cap."""

    def __init__(self, g1: nx.Graph, g2: nx.Graph, cap: int):
        super().__init__(g1, g2, node_match=lambda a, b: a["side"] == b["side"])
        self.cap = cap
        self.steps = 0

    def semantic_feasibility(self, g1_node, g2_node) -> bool:
        self.steps += 1
        if self.steps > self.cap:
            raise CapExceededError("max_iso_nodes", self.cap, self.steps, "--max-iso-nodes")
        return super().semantic_feasibility(g1_node, g2_node)


def _signature(m: Classification):
    return (sorted(m.incidence.sum(axis=1).tolist()), sorted(m.incidence.sum(axis=0).tolist()))


def cls_iso(m1: Classification, m2: Classification) -> Optional[ClassificationIso]:
    """A pair of bijections making m1 and m2 isomorphic, or None."""
    if len(m1.instances) != len(m2.instances) or len(m1.types) != len(m2.types):
        return None
    if _signature(m1) != _signature(m2):
        return None
    matcher = _CappedMatcher(_incidence_graph(m1), _incidence_graph(m2), get_config().max_iso_nodes)
    mapping = next(matcher.isomorphisms_iter(), None)
    if mapping is None:
        return None
    inst = {x: mapping[("i", x)][1] for x in m1.instances}
    types = {y: mapping[("t", y)][1] for y in m1.types}
    return ClassificationIso(
        SetFn.from_mapping(m1.instances, m2.instances, inst),
        SetFn.from_mapping(m1.types, m2.types, types),
    )

