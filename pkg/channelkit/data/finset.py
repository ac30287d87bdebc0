"""
Finite sets of symbolic names and total functions between them.

These are the languages of the IFC environment: a language is a FinSet of
type names, a language morphism is a SetFn.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Sequence, Tuple

from ..core.errors import LanguageMismatchError, MalformedDiagramError, NotInDomainError


@dataclass(frozen=True)
class FinSet:
    """An ordered finite set of distinct names; the order is canonical."""

    elements: Tuple[str, ...] = ()
    _index: Dict[str, int] = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        index: Dict[str, int] = {}
        for position, name in enumerate(elements):
            if not isinstance(name, str):
                raise MalformedDiagramError(f"set element {name!r} is not a string")
            if name in index:
                raise MalformedDiagramError(f"duplicate element {name!r} in finite set")
            index[name] = position
        object.__setattr__(self, "_index", index)

    @classmethod
    def of(cls, *names: str) -> "FinSet":
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise NotInDomainError(f"{name!r} is not an element of {self}", element=name)

    def mask(self, names: Iterable[str]) -> int:
        """Bitmask of a subset, bit i standing for the i-th element."""
        bits = 0
        for name in names:
            bits |= 1 << self.index(name)
        return bits

    def subset(self, mask: int) -> Tuple[str, ...]:
        """Elements selected by a bitmask, in canonical order."""
        return tuple(name for i, name in enumerate(self.elements) if mask >> i & 1)

    def sort(self, names: Iterable[str]) -> Tuple[str, ...]:
        """Deduplicate and order a subset canonically."""
        return self.subset(self.mask(names))

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    def __str__(self) -> str:
        return "{" + ", ".join(self.elements) + "}"


@dataclass(frozen=True)
class SetFn:
    """A total function between finite sets, stored as images in source order."""

    source: FinSet
    target: FinSet
    images: Tuple[str, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != len(self.source):
            raise MalformedDiagramError(
                f"function assigns {len(images)} images to a source of size {len(self.source)}"
            )
        for x, y in zip(self.source, images):
            if y not in self.target:
                raise MalformedDiagramError(f"image {y!r} of {x!r} is not in the target {self.target}")

    @classmethod
    def from_mapping(cls, source: FinSet, target: FinSet, mapping: Mapping[str, str]) -> "SetFn":
        missing = [x for x in source if x not in mapping]
        if missing:
            raise MalformedDiagramError(f"function is not total: no image for {missing[0]!r}", element=missing[0])
        extra = [x for x in mapping if x not in source]
        if extra:
            raise MalformedDiagramError(f"{extra[0]!r} is not in the function's source", element=extra[0])
        return cls(source, target, tuple(mapping[x] for x in source))

    @classmethod
    def identity(cls, s: FinSet) -> "SetFn":
        return cls(s, s, s.elements)

    def __call__(self, x: str) -> str:
        return self.images[self.source.index(x)]

    def as_dict(self) -> Dict[str, str]:
        return dict(zip(self.source.elements, self.images))

    def image(self, names: Iterable[str]) -> FrozenSet[str]:
        return frozenset(self(x) for x in names)

    def preimage(self, names: Iterable[str]) -> Tuple[str, ...]:
        wanted = set(names)
        return tuple(x for x, y in zip(self.source, self.images) if y in wanted)

    def image_masks(self) -> Sequence[int]:
        """Target bit of each source element, in source order."""
        return [1 << self.target.index(y) for y in self.images]

    def then(self, other: "SetFn") -> "SetFn":
        """Diagrammatic composition: first self, then other."""
        if self.target != other.source:
            raise LanguageMismatchError("cannot compose functions: codomain and domain differ")
        return SetFn(self.source, other.target, tuple(other(y) for y in self.images))


def compose(f: SetFn, g: SetFn) -> SetFn:
    """f ; g: apply f, then g."""
    return f.then(g)


def identity(s: FinSet) -> SetFn:
    return SetFn.identity(s)
