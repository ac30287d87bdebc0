"""
Classifications (IFC structures) and infomorphisms between them.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import numpy as np

from ..core.errors import LanguageMismatchError, MalformedDiagramError, StructureMismatchError
from .finset import FinSet, SetFn
from .sequent import StateDescription

# int64 rows stay exact up to this many types
PACKED_BITS = 62


@dataclass(frozen=True, eq=False)
class Classification:
    """Instances, types and a boolean incidence matrix (instances × types)."""

    instances: FinSet
    types: FinSet
    incidence: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.incidence, dtype=bool).reshape(len(self.instances), len(self.types))
        matrix.setflags(write=False)
        object.__setattr__(self, "incidence", matrix)

    @classmethod
    def from_rows(cls, instances: Iterable[str], types: FinSet, rows: Mapping[str, Iterable[str]]) -> "Classification":
        """Build from per-instance type lists; instances missing from ``rows`` have empty rows."""
        inst = instances if isinstance(instances, FinSet) else FinSet(tuple(instances))
        for x in rows:
            if x not in inst:
                raise MalformedDiagramError(f"incidence row for unknown instance {x!r}", instance=x)
        matrix = np.zeros((len(inst), len(types)), dtype=bool)
        for x, ys in rows.items():
            for y in ys:
                if y not in types:
                    raise LanguageMismatchError(f"instance {x!r} is classified by unknown type {y!r}", instance=x, type=y)
                matrix[inst.index(x), types.index(y)] = True
        return cls(inst, types, matrix)

    @classmethod
    def empty(cls, types: FinSet) -> "Classification":
        return cls(FinSet(), types, np.zeros((0, len(types)), dtype=bool))

    def holds(self, instance: str, type_: str) -> bool:
        """instance ⊨ type"""
        return bool(self.incidence[self.instances.index(instance), self.types.index(type_)])

    def row(self, instance: str) -> Tuple[str, ...]:
        columns = np.flatnonzero(self.incidence[self.instances.index(instance)])
        return tuple(self.types.elements[j] for j in columns)

    def row_mask(self, instance: str) -> int:
        return self.row_masks()[self.instances.index(instance)]

    def row_masks(self) -> List[int]:
        """Rows as exact int bitmasks; packed through int64 only while every bit fits."""
        if len(self.types) <= PACKED_BITS:
            weights = 1 << np.arange(len(self.types), dtype=np.int64)
            return [int(v) for v in self.incidence.astype(np.int64) @ weights]
        return [sum(1 << int(j) for j in np.flatnonzero(row)) for row in self.incidence]

    def row_set(self) -> frozenset:
        return frozenset(self.row_masks())

    def state(self, instance: str) -> StateDescription:
        return StateDescription(self.types, self.row(instance))

    def rows(self) -> Dict[str, Tuple[str, ...]]:
        return {x: self.row(x) for x in self.instances}

    def renamed(self, instances: Mapping[str, str], types: Mapping[str, str]) -> "Classification":
        """Same incidence under renamed instances and types."""
        return Classification(
            FinSet(tuple(instances.get(x, x) for x in self.instances)),
            FinSet(tuple(types.get(y, y) for y in self.types)),
            self.incidence,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Classification):
            return NotImplemented
        return (self.instances == other.instances and self.types == other.types
                and np.array_equal(self.incidence, other.incidence))

    def __hash__(self) -> int:
        return hash((self.instances, self.types, self.incidence.tobytes()))

    def __repr__(self) -> str:
        return f"Classification(instances={self.instances}, types={self.types})"


@dataclass(frozen=True)
class Infomorphism:
    """Types forward, instances backward: (type_map: Y → Z, inst_map: inst(target) → inst(source))."""

    source: Classification
    target: Classification
    type_map: SetFn
    inst_map: SetFn

    def __post_init__(self):
        if self.type_map.source != self.source.types or self.type_map.target != self.target.types:
            raise StructureMismatchError("type map must run from the source types to the target types")
        if self.inst_map.source != self.target.instances or self.inst_map.target != self.source.instances:
            raise StructureMismatchError("instance map must run from the target instances to the source instances")

    @classmethod
    def from_mappings(cls, source: Classification, target: Classification,
                      types: Mapping[str, str], instances: Mapping[str, str]) -> "Infomorphism":
        return cls(
            source, target,
            SetFn.from_mapping(source.types, target.types, types),
            SetFn.from_mapping(target.instances, source.instances, instances),
        )

    @classmethod
    def identity(cls, m: Classification) -> "Infomorphism":
        return cls(m, m, SetFn.identity(m.types), SetFn.identity(m.instances))

    def violation(self) -> Optional[Tuple[str, str]]:
        """First (target instance, source type) pair breaking the fundamental condition."""
        back = self.source.incidence[[self.source.instances.index(x) for x in self.inst_map.images], :] \
            if len(self.target.instances) else np.zeros((0, len(self.source.types)), dtype=bool)
        forward = self.target.incidence[:, [self.target.types.index(z) for z in self.type_map.images]] \
            if len(self.source.types) else np.zeros((len(self.target.instances), 0), dtype=bool)
        bad = np.argwhere(back != forward)
        if len(bad) == 0:
            return None
        i, j = bad[0]
        return self.target.instances.elements[i], self.source.types.elements[j]

    def then(self, other: "Infomorphism") -> "Infomorphism":
        """Diagrammatic composition self ; other (types forward, instances backward)."""
        if self.target != other.source:
            raise StructureMismatchError("cannot compose infomorphisms: classifications do not meet")
        return Infomorphism(self.source, other.target, self.type_map.then(other.type_map),
                            other.inst_map.then(self.inst_map))
