"""
Seeded random generators for the randomized suites.

Every generator takes a numpy Generator so a suite is reproducible from a
single seed. Infomorphisms are built so that the fundamental condition
holds by construction.
"""

from typing import Dict, List, Optional, Tuple

import numpy as np

from ..data.classification import Classification, Infomorphism
from ..data.diagram import DiagramEdge
from ..data.finset import FinSet, SetFn
from ..data.logic import LocalLogic
from ..data.sequent import Sequent, Theory
from ..data.system import Channel, DistributedSystem


def rng_for(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_language(rng: np.random.Generator, size: int, prefix: str = "y") -> FinSet:
    return FinSet(tuple(f"{prefix}{i}" for i in range(size)))


def random_mask(rng: np.random.Generator, n: int, density: float = 0.5) -> int:
    bits = rng.random(n) < density
    return int(sum(1 << i for i in np.flatnonzero(bits)))


def classification_from_masks(instances: List[str], types: FinSet, masks: List[int]) -> Classification:
    matrix = np.array([[bool(mask >> j & 1) for j in range(len(types))] for mask in masks],
                      dtype=bool).reshape(len(masks), len(types))
    return Classification(FinSet(tuple(instances)), types, matrix)


def random_classification(rng: np.random.Generator, types: FinSet, n_instances: int,
                          prefix: str = "x", density: float = 0.5) -> Classification:
    masks = [random_mask(rng, len(types), density) for _ in range(n_instances)]
    return classification_from_masks([f"{prefix}{i}" for i in range(n_instances)], types, masks)


def random_sequent(rng: np.random.Generator, language: FinSet, density: float = 0.3) -> Sequent:
    n = len(language)
    return Sequent.from_masks(language, random_mask(rng, n, density), random_mask(rng, n, density))


def random_theory(rng: np.random.Generator, language: FinSet, size: Optional[int] = None) -> Theory:
    size = int(rng.integers(0, 4)) if size is None else size
    return Theory(language, frozenset(random_sequent(rng, language) for _ in range(size)))


def random_setfn(rng: np.random.Generator, source: FinSet, target: FinSet) -> SetFn:
    if len(target) == 0:
        if len(source):
            raise ValueError("no function from a nonempty set into the empty set")
        return SetFn(source, target, ())
    picks = rng.integers(0, len(target), size=len(source))
    return SetFn(source, target, tuple(target.elements[k] for k in picks))


def random_injection(rng: np.random.Generator, source: FinSet, target: FinSet) -> SetFn:
    picks = rng.permutation(len(target))[:len(source)]
    return SetFn(source, target, tuple(target.elements[k] for k in picks))


def infomorphism_into(rng: np.random.Generator, target: Classification, source_types: FinSet,
                      extra_instances: int = 1, prefix: str = "x") -> Infomorphism:
    """A valid infomorphism from a fresh classification into ``target``.

    Target instances with the same pulled-back row share one source instance;
    a few unrelated source instances are added.
    """
    if len(target.types) == 0 and len(source_types):
        raise ValueError("cannot map types into an empty language")
    sigma = random_setfn(rng, source_types, target.types)
    bits = sigma.image_masks()
    pulled = {}
    inst_of: Dict[str, str] = {}
    for u, row in zip(target.instances, target.row_masks()):
        mask = sum(1 << i for i, bit in enumerate(bits) if row & bit)
        if mask not in pulled:
            pulled[mask] = f"{prefix}{len(pulled)}"
        inst_of[u] = pulled[mask]
    names = list(pulled.values())
    masks = list(pulled.keys())
    for _ in range(int(rng.integers(0, extra_instances + 1))):
        names.append(f"{prefix}{len(names)}")
        masks.append(random_mask(rng, len(source_types)))
    order = rng.permutation(len(names))
    source = classification_from_masks([names[k] for k in order], source_types, [masks[k] for k in order])
    return Infomorphism.from_mappings(source, target, sigma.as_dict(), inst_of)


def infomorphism_from(rng: np.random.Generator, source: Classification, extra_types: int = 1,
                      n_instances: int = 3, prefix: str = "z", inst_prefix: str = "w") -> Infomorphism:
    """A valid infomorphism from ``source`` into a fresh classification.

    The type map is injective; each target instance copies the row of a
    source instance and fills the extra types at random.
    """
    target_types = random_language(rng, len(source.types) + extra_types, prefix)
    sigma = random_injection(rng, source.types, target_types)
    if len(source.instances) == 0:
        n_instances = 0
    hit = set(sigma.images)
    rows: List[int] = []
    inst_map: Dict[str, str] = {}
    names = [f"{inst_prefix}{i}" for i in range(n_instances)]
    for w in names:
        x = source.instances.elements[int(rng.integers(0, len(source.instances)))]
        inst_map[w] = x
        row = target_types.mask(sigma(y) for y in source.row(x))
        row |= target_types.mask(z for z in target_types if z not in hit and rng.random() < 0.5)
        rows.append(row)
    target = classification_from_masks(names, target_types, rows)
    return Infomorphism.from_mappings(source, target, sigma.as_dict(), inst_map)


def random_infomorphism(rng: np.random.Generator, max_types: int = 4, max_instances: int = 4) -> Infomorphism:
    target_types = random_language(rng, int(rng.integers(1, max_types + 1)), "z")
    target = random_classification(rng, target_types, int(rng.integers(0, max_instances + 1)), "u")
    source_types = random_language(rng, int(rng.integers(0, max_types + 1)), "y")
    return infomorphism_into(rng, target, source_types)


def random_sound_logic(rng: np.random.Generator, m: Classification, tries: int = 6) -> LocalLogic:
    """Random sequents that the structure happens to satisfy."""
    kept = []
    for _ in range(tries):
        q = random_sequent(rng, m.types)
        if all(bool((row & q.gamma_mask) != q.gamma_mask or (row & q.delta_mask)) for row in m.row_masks()):
            kept.append(q)
    return LocalLogic.over(m, Theory(m.types, frozenset(kept)))


def random_complete_logic(rng: np.random.Generator, m: Classification, extra: int = 2) -> LocalLogic:
    """Exclusion sequents for every non-row state, plus random extras.

    The exclusions alone are entailment-equivalent to the intent; extras can
    only shrink the extent, so the result stays complete.
    """
    n = len(m.types)
    rows = m.row_set()
    full = m.types.full_mask
    sequents = {Sequent.from_masks(m.types, s, full & ~s) for s in range(1 << n) if s not in rows}
    sequents |= {random_sequent(rng, m.types) for _ in range(int(rng.integers(0, extra + 1)))}
    return LocalLogic.over(m, Theory(m.types, frozenset(sequents)))


def random_system(rng: np.random.Generator, max_nodes: int = 4, max_edges: int = 4,
                  max_types: int = 3, max_instances: int = 3) -> DistributedSystem:
    """A connected-or-not small system grown edge by edge from a random root."""
    n_nodes = int(rng.integers(1, max_nodes + 1))
    nodes: List[Tuple[str, Classification]] = []
    edges: List[DiagramEdge] = []
    root_types = random_language(rng, int(rng.integers(1, max_types + 1)), "n0y")
    nodes.append(("n0", random_classification(rng, root_types, int(rng.integers(1, max_instances + 1)), "n0x")))
    for k in range(1, n_nodes):
        name = f"n{k}"
        if len(edges) >= max_edges or rng.random() < 0.2:
            types = random_language(rng, int(rng.integers(1, max_types + 1)), f"{name}y")
            nodes.append((name, random_classification(rng, types, int(rng.integers(1, max_instances + 1)), f"{name}x")))
            continue
        other, c = nodes[int(rng.integers(0, len(nodes)))]
        if rng.random() < 0.5:
            f = infomorphism_from(rng, c, extra_types=int(rng.integers(0, 2)),
                                  n_instances=int(rng.integers(1, max_instances + 1)),
                                  prefix=f"{name}y", inst_prefix=f"{name}x")
            nodes.append((name, f.target))
            edges.append(DiagramEdge(f"e{len(edges)}", other, name, f))
        else:
            f = infomorphism_into(rng, c, random_language(rng, int(rng.integers(1, max_types + 1)), f"{name}y"),
                                  prefix=f"{name}x")
            nodes.append((name, f.source))
            edges.append(DiagramEdge(f"e{len(edges)}", name, other, f))
    return DistributedSystem(tuple(nodes), tuple(edges))


def refine_channel(rng: np.random.Generator, ch: Channel) -> Tuple[Channel, Infomorphism]:
    """Another covering channel obtained by following ``ch`` with a random refinement."""
    r = infomorphism_from(rng, ch.core, extra_types=int(rng.integers(0, 2)),
                          n_instances=int(rng.integers(1, 4)), prefix="r", inst_prefix="w")
    legs = {node: leg.then(r) for node, leg in ch.legs.items()}
    return Channel(ch.system, r.target, legs), r
