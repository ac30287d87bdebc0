"""
Distributed systems and the channels that cover them.
"""

from dataclasses import dataclass
from typing import Mapping, Tuple

from ..core.errors import (
    IndexMismatchError, InvalidInfomorphismError, MalformedDiagramError, StructureMismatchError,
)
from .classification import Classification, Infomorphism
from .diagram import Diagram, DiagramEdge


class DistributedSystem(Diagram):
    """A diagram of classifications whose edges are valid infomorphisms."""

    def __post_init__(self):
        super().__post_init__()
        for name, c in self.nodes:
            if not isinstance(c, Classification):
                raise MalformedDiagramError(f"node {name!r} is not a classification", node=name)
        for edge in self.edges:
            if not isinstance(edge.arrow, Infomorphism):
                raise MalformedDiagramError(f"edge {edge.name!r} is not an infomorphism", edge=edge.name)
        self.check_endpoints(lambda f: f.source, lambda f: f.target)
        for edge in self.edges:
            bad = edge.arrow.violation()
            if bad is not None:
                raise InvalidInfomorphismError(
                    f"edge {edge.name!r} breaks the fundamental condition at instance {bad[0]!r}, type {bad[1]!r}",
                    instance=bad[0], type_=bad[1], edge=edge.name,
                )

    @classmethod
    def build(cls, nodes: Mapping[str, Classification],
              edges: Mapping[str, Tuple[str, str, Infomorphism]] = None) -> "DistributedSystem":
        edges = edges or {}
        return cls(tuple(nodes.items()),
                   tuple(DiagramEdge(name, src, dst, f) for name, (src, dst, f) in edges.items()))

    def with_nodes(self, order) -> "DistributedSystem":
        reordered = super().with_nodes(order)
        return DistributedSystem(reordered.nodes, reordered.edges)


@dataclass(frozen=True)
class Channel:
    """A core classification and one leg per system node into it."""

    system: DistributedSystem
    core: Classification
    legs: Mapping[str, Infomorphism]

    def __post_init__(self):
        names = self.system.node_names
        if set(self.legs) != set(names):
            raise IndexMismatchError(
                f"channel legs {sorted(self.legs)} do not match system nodes {sorted(names)}"
            )
        for node, c in self.system.items():
            leg = self.legs[node]
            if leg.source != c or leg.target != self.core:
                raise StructureMismatchError(f"leg {node!r} does not run from its node into the core", node=node)
        object.__setattr__(self, "legs", {node: self.legs[node] for node in names})
