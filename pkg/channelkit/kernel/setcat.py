"""
Finite colimits and limits of diagrams of finite sets.

Colimits quotient the tagged disjoint union of the nodes by the least
equivalence generated by the edges; limits are the edge-compatible tuples
of the product. Both are the substrate for classification colimits: types
travel along the colimit, instances contravariantly along the limit.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from networkx.utils import UnionFind

from ..core.config import get_config
from ..core.errors import CapExceededError, MalformedDiagramError, NotCommutingError
from ..data.diagram import Diagram, DiagramEdge, discrete
from ..data.finset import FinSet, SetFn
from ..utils.reporting import log

SetDiagram = Diagram  # Diagram[FinSet, SetFn]


def _escape(name: str, specials: str) -> str:
    out = name.replace("\\", "\\\\")
    for ch in specials:
        out = out.replace(ch, "\\" + ch)
    return out


def tag(element: str, node: str) -> str:
    """Collision-free rendering of an element of a node as ``element@node``."""
    return f"{_escape(element, '@')}@{_escape(node, '@')}"


def render_tuple(components: Tuple[str, ...]) -> str:
    return "(" + ",".join(_escape(c, ",()") for c in components) + ")"


@dataclass(frozen=True)
class Cocone:
    """Apex plus one leg per node, from the node into the apex."""

    diagram: Diagram
    apex: FinSet
    legs: Mapping[str, SetFn]


@dataclass(frozen=True)
class Cone:
    """Apex plus one projection per node, from the apex onto the node."""

    diagram: Diagram
    apex: FinSet
    legs: Mapping[str, SetFn]
    tuples: Tuple[Tuple[str, ...], ...]


def check_set_diagram(d: Diagram) -> None:
    for edge in d.edges:
        if not isinstance(edge.arrow, SetFn):
            raise MalformedDiagramError(f"edge {edge.name!r} does not carry a set function", edge=edge.name)
    d.check_endpoints(lambda f: f.source, lambda f: f.target)


def non_commuting_edge(cocone: Cocone) -> Optional[str]:
    """Name of the first edge e : i → j with e ; leg_j ≠ leg_i."""
    for edge in cocone.diagram.edges:
        if edge.arrow.then(cocone.legs[edge.dst]) != cocone.legs[edge.src]:
            return edge.name
    return None


def coproduct(a: FinSet, b: FinSet) -> Tuple[FinSet, SetFn, SetFn]:
    """Disjoint union with its two injections; elements tagged by origin 0 / 1."""
    cocone = set_colimit(discrete({"0": a, "1": b}))
    return cocone.apex, cocone.legs["0"], cocone.legs["1"]


def set_colimit(d: Diagram) -> Cocone:
    """Colimit of a diagram of finite sets.

    Each quotient class is named by its least tagged member in
    (node order, element order); the apex lists classes in that same order.
    """
    check_set_diagram(d)
    classes = UnionFind()
    order: List[Tuple[str, str]] = []
    for node, s in d.items():
        for x in s:
            classes[(node, x)]
            order.append((node, x))
    for edge in d.edges:
        for x, y in zip(edge.arrow.source, edge.arrow.images):
            classes.union((edge.src, x), (edge.dst, y))

    class_name: Dict[object, str] = {}
    for node, x in order:
        class_name.setdefault(classes[(node, x)], tag(x, node))
    apex = FinSet(tuple(class_name.values()))
    legs = {
        node: SetFn(s, apex, tuple(class_name[classes[(node, x)]] for x in s))
        for node, s in d.items()
    }
    log(f"🔗 set colimit: {len(order)} tagged elements -> {len(apex)} classes")
    return Cocone(d, apex, legs)


def _edge_tuples(d: Diagram, cap: int) -> Iterator[Tuple[str, ...]]:
    names = d.node_names
    position = {n: i for i, n in enumerate(names)}
    incoming: Dict[int, List[DiagramEdge]] = {i: [] for i in range(len(names))}
    for edge in d.edges:
        later = max(position[edge.src], position[edge.dst])
        incoming[later].append(edge)

    produced = 0
    current: List[str] = []

    def extend(k: int) -> Iterator[Tuple[str, ...]]:
        nonlocal produced
        if k == len(names):
            produced += 1
            if produced > cap:
                raise CapExceededError("max_product", cap, produced, "--max-product")
            yield tuple(current)
            return
        for value in d[names[k]]:
            current.append(value)
            if all(edge.arrow(current[position[edge.src]]) == current[position[edge.dst]]
                   for edge in incoming[k]):
                yield from extend(k + 1)
            current.pop()

    yield from extend(0)


def set_limit(d: Diagram) -> Cone:
    """Limit of a diagram of finite sets: edge-compatible tuples with projections."""
    check_set_diagram(d)
    cap = get_config().max_product
    tuples = tuple(_edge_tuples(d, cap))
    apex = FinSet(tuple(render_tuple(t) for t in tuples))
    legs = {
        node: SetFn(apex, s, tuple(t[k] for t in tuples))
        for k, (node, s) in enumerate(d.items())
    }
    log(f"🧮 set limit: {len(tuples)} compatible tuples over {len(d)} nodes")
    return Cone(d, apex, legs, tuples)


def mediator_set(colim: Cocone, other: Cocone) -> SetFn:
    """The unique map from a colimit apex to another cocone's apex commuting with the legs."""
    if colim.diagram.node_names != other.diagram.node_names:
        raise MalformedDiagramError("cocones are over different diagrams")
    images: Dict[str, str] = {}
    for node, s in colim.diagram.items():
        for x in s:
            cls_name = colim.legs[node](x)
            target = other.legs[node](x)
            if images.setdefault(cls_name, target) != target:
                raise NotCommutingError(
                    f"cocone sends {x!r} of node {node!r} to {target!r}, but its class goes to {images[cls_name]!r}",
                    node=node, element=x,
                )
    return SetFn.from_mapping(colim.apex, other.apex, images)


def is_bijection(f: SetFn) -> bool:
    return len(set(f.images)) == len(f.images) == len(f.target)
