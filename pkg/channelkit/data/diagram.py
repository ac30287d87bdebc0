"""
Finite graph-shaped diagrams.

A diagram is an ordered family of named nodes and an ordered family of named
edges between them. The same carrier holds diagrams of languages (SetFn
edges), of classifications (Infomorphism edges) and of theories (SetFn
edges between theory languages).
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, Generic, Iterator, Mapping, Sequence, Tuple, TypeVar

import networkx as nx

from ..core.errors import MalformedDiagramError

N = TypeVar("N")
A = TypeVar("A")


@dataclass(frozen=True)
class DiagramEdge(Generic[A]):
    """A named arrow ``name : src -> dst`` carrying the morphism ``arrow``."""

    name: str
    src: str
    dst: str
    arrow: A


@dataclass(frozen=True)
class Diagram(Generic[N, A]):
    """Nodes in canonical order plus generating edges (free-category semantics)."""

    nodes: Tuple[Tuple[str, N], ...] = ()
    edges: Tuple[DiagramEdge, ...] = ()
    _lookup: Dict[str, N] = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        nodes = tuple((str(k), v) for k, v in (self.nodes.items() if isinstance(self.nodes, Mapping) else self.nodes))
        edges = tuple(self.edges)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", edges)
        lookup: Dict[str, N] = {}
        for name, value in nodes:
            if name in lookup:
                raise MalformedDiagramError(f"duplicate node {name!r}", node=name)
            lookup[name] = value
        object.__setattr__(self, "_lookup", lookup)
        seen = set()
        for edge in edges:
            if edge.name in seen:
                raise MalformedDiagramError(f"duplicate edge {edge.name!r}", edge=edge.name)
            seen.add(edge.name)
            for end in (edge.src, edge.dst):
                if end not in lookup:
                    raise MalformedDiagramError(
                        f"edge {edge.name!r} refers to unknown node {end!r}", edge=edge.name, node=end
                    )

    def __getitem__(self, node: str) -> N:
        return self._lookup[node]

    def __contains__(self, node: object) -> bool:
        return node in self._lookup

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def node_names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.nodes)

    def node_index(self, node: str) -> int:
        return self.node_names.index(node)

    def items(self) -> Iterator[Tuple[str, N]]:
        return iter(self.nodes)

    def check_endpoints(self, source_of: Callable[[A], object], target_of: Callable[[A], object]) -> None:
        """Every edge's arrow must start at its src node value and end at its dst node value."""
        for edge in self.edges:
            if source_of(edge.arrow) != self[edge.src] or target_of(edge.arrow) != self[edge.dst]:
                raise MalformedDiagramError(
                    f"edge {edge.name!r} does not run from node {edge.src!r} to node {edge.dst!r}",
                    edge=edge.name,
                )

    def map_nodes(self, node_fn: Callable[[N], object], arrow_fn: Callable[[A], object],
                  reverse: bool = False) -> "Diagram":
        """Apply a functor-like pair of maps; ``reverse`` flips every edge."""
        edges = tuple(
            DiagramEdge(e.name, e.dst, e.src, arrow_fn(e.arrow)) if reverse
            else DiagramEdge(e.name, e.src, e.dst, arrow_fn(e.arrow))
            for e in self.edges
        )
        return Diagram(tuple((k, node_fn(v)) for k, v in self.nodes), edges)

    def with_nodes(self, order: Sequence[str]) -> "Diagram":
        """Same diagram with its nodes listed in another order."""
        if sorted(order) != sorted(self.node_names):
            raise MalformedDiagramError("reordering must be a permutation of the node names")
        return Diagram(tuple((k, self[k]) for k in order), self.edges)

    def graph(self) -> nx.MultiDiGraph:
        """The underlying shape graph."""
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.node_names)
        for edge in self.edges:
            g.add_edge(edge.src, edge.dst, key=edge.name)
        return g


def discrete(nodes: Mapping[str, N]) -> Diagram:
    """Diagram with the given nodes and no edges."""
    return Diagram(tuple(nodes.items()), ())
