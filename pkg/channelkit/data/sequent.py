"""
Sequents, theories and state descriptions over a finite language.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Tuple

from ..core.errors import LanguageMismatchError, SequentOutOfLanguageError, UsageError
from .finset import FinSet

TURNSTILE = "|-"


def _check_subset(language: FinSet, names: Iterable[str], side: str) -> Tuple[str, ...]:
    names = tuple(names)
    for name in names:
        if name not in language:
            raise SequentOutOfLanguageError(
                f"{side} type {name!r} is not in the language {language}", type=name, side=side
            )
    return language.sort(names)


@dataclass(frozen=True)
class Sequent:
    """Γ ⊢ Δ with Γ, Δ subsets of the language, stored sorted and deduplicated."""

    language: FinSet
    gamma: Tuple[str, ...] = ()
    delta: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gamma", _check_subset(self.language, self.gamma, "gamma"))
        object.__setattr__(self, "delta", _check_subset(self.language, self.delta, "delta"))

    @classmethod
    def from_masks(cls, language: FinSet, gamma: int, delta: int) -> "Sequent":
        return cls(language, language.subset(gamma), language.subset(delta))

    @classmethod
    def parse(cls, language: FinSet, literal: str) -> "Sequent":
        """Parse ``"a b |- c d"``; either side may be empty."""
        if literal.count(TURNSTILE) != 1:
            raise UsageError(f"sequent literal {literal!r} needs exactly one {TURNSTILE!r}")
        left, right = literal.split(TURNSTILE)
        return cls(language, tuple(left.split()), tuple(right.split()))

    @property
    def gamma_mask(self) -> int:
        return self.language.mask(self.gamma)

    @property
    def delta_mask(self) -> int:
        return self.language.mask(self.delta)

    @property
    def masks(self) -> Tuple[int, int]:
        return self.gamma_mask, self.delta_mask

    def sort_key(self) -> Tuple[int, Tuple[int, ...], Tuple[int, ...]]:
        g = tuple(self.language.index(x) for x in self.gamma)
        d = tuple(self.language.index(x) for x in self.delta)
        return len(g) + len(d), g, d

    def to_dict(self) -> dict:
        return {"gamma": list(self.gamma), "delta": list(self.delta)}

    def __str__(self) -> str:
        left = " ".join(self.gamma)
        right = " ".join(self.delta)
        return f"{left} {TURNSTILE} {right}".strip() if left or right else TURNSTILE


def parse_sequent(language: FinSet, literal: str) -> Sequent:
    return Sequent.parse(language, literal)


@dataclass(frozen=True)
class Theory:
    """A finite set of sequents over one language (generators, not a closure)."""

    language: FinSet
    sequents: FrozenSet[Sequent] = frozenset()

    def __post_init__(self):
        sequents = frozenset(self.sequents)
        for q in sequents:
            if q.language != self.language:
                raise LanguageMismatchError(f"sequent {q} is not over the theory language {self.language}")
        object.__setattr__(self, "sequents", sequents)

    @classmethod
    def of(cls, language: FinSet, *sequents: Sequent) -> "Theory":
        return cls(language, frozenset(sequents))

    @classmethod
    def from_pairs(cls, language: FinSet, pairs: Iterable[Tuple[Iterable[str], Iterable[str]]]) -> "Theory":
        return cls(language, frozenset(Sequent(language, tuple(g), tuple(d)) for g, d in pairs))

    def __iter__(self) -> Iterator[Sequent]:
        return iter(self.ordered())

    def __len__(self) -> int:
        return len(self.sequents)

    def __contains__(self, q: object) -> bool:
        return q in self.sequents

    def ordered(self) -> List[Sequent]:
        return sorted(self.sequents, key=Sequent.sort_key)

    def masks(self) -> List[Tuple[int, int]]:
        return [q.masks for q in self.ordered()]

    def union(self, other: "Theory") -> "Theory":
        if other.language != self.language:
            raise LanguageMismatchError("cannot unite theories over different languages")
        return Theory(self.language, self.sequents | other.sequents)

    def issuperset(self, other: "Theory") -> bool:
        return self.sequents >= other.sequents

    def __str__(self) -> str:
        return "{" + "; ".join(str(q) for q in self.ordered()) + "}"


@dataclass(frozen=True)
class StateDescription:
    """One instance row: the set of types it is classified by."""

    over: FinSet
    members: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "members", _check_subset(self.over, self.members, "state"))

    @classmethod
    def from_mask(cls, over: FinSet, mask: int) -> "StateDescription":
        return cls(over, over.subset(mask))

    @property
    def mask(self) -> int:
        return self.over.mask(self.members)

    def __str__(self) -> str:
        return "{" + ", ".join(self.members) + "}"
