"""
Sequent entailment, closure, theory order, translation and theory colimits.

Entailment is decided over state descriptions: a classification satisfies a
sequent iff each of its instance rows does, so every counterexample shrinks
to a single row, and a theory entails a sequent iff every state that
satisfies the theory satisfies the sequent. For a language of n types this
is an exact check over 2^n states.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional

import numpy as np

from ..core.errors import InvalidTheoryMorphismError, LanguageMismatchError
from ..data.diagram import Diagram
from ..data.finset import FinSet, SetFn
from ..data.sequent import Sequent, StateDescription, Theory
from ..utils import bitsets
from ..utils.reporting import log
from .setcat import Cocone, set_colimit

TheoryDiagram = Diagram  # Diagram[Theory, SetFn]


@dataclass(frozen=True)
class TheoryMorphismWitness:
    """Verdict for σ : T1 → T2, with a generator of T1 whose translation T2 fails to entail."""

    sigma: SetFn
    source: Theory
    target: Theory
    verdict: bool
    counterexample: Optional[Sequent] = None


class TheoryColimit(NamedTuple):
    theory: Theory
    cocone: Cocone


def _same_language(expected: FinSet, actual: FinSet, what: str) -> None:
    if expected != actual:
        raise LanguageMismatchError(f"{what}: expected language {expected}, got {actual}")


def row_satisfies(s: StateDescription, q: Sequent) -> bool:
    """Γ ⊆ s implies s ∩ Δ ≠ ∅."""
    _same_language(s.over, q.language, "row_satisfies")
    gamma, delta = q.masks
    return (s.mask & gamma) != gamma or (s.mask & delta) != 0


@lru_cache(maxsize=4096)
def _models(t: Theory) -> np.ndarray:
    states = bitsets.model_states(len(t.language), t.masks())
    states.setflags(write=False)
    return states


def model_masks(t: Theory) -> np.ndarray:
    """The extent of a theory as an array of state masks."""
    bitsets.require_types(len(t.language))
    return _models(t)


def models(t: Theory) -> list:
    """The extent of a theory as state descriptions."""
    return [StateDescription.from_mask(t.language, int(s)) for s in model_masks(t)]


def defeating_state(t: Theory, q: Sequent) -> Optional[StateDescription]:
    """First model of ``t`` that violates ``q``, if any."""
    _same_language(t.language, q.language, "entails")
    states = model_masks(t)
    bad = states[~bitsets.row_satisfies(states, *q.masks)]
    return StateDescription.from_mask(t.language, int(bad[0])) if len(bad) else None


def entails(t: Theory, q: Sequent) -> bool:
    """Every state satisfying all of ``t`` satisfies ``q``."""
    return defeating_state(t, q) is None


def _sequents_from(language: FinSet, gammas: np.ndarray, deltas: np.ndarray) -> Theory:
    return Theory(language, frozenset(
        Sequent.from_masks(language, int(g), int(d)) for g, d in zip(gammas, deltas)
    ))


def closure(t: Theory) -> Theory:
    """All sequents entailed by ``t``."""
    n = len(t.language)
    bitsets.require_types(n, "max_closure_types")
    gammas, deltas = bitsets.sequent_pairs(n)
    keep = bitsets.satisfied_pairs(model_masks(t), gammas, deltas)
    log(f"📚 closure over {n} types: {int(keep.sum())} of {len(keep)} sequents")
    return _sequents_from(t.language, gammas[keep], deltas[keep])


def theory_leq(t1: Theory, t2: Theory) -> bool:
    """Extent order: every model of t1 is a model of t2."""
    _same_language(t1.language, t2.language, "theory_leq")
    return bool(np.isin(model_masks(t1), model_masks(t2)).all())


def theory_equiv(t1: Theory, t2: Theory) -> bool:
    return theory_leq(t1, t2) and theory_leq(t2, t1)


def sen_translate(sigma: SetFn, q: Sequent) -> Sequent:
    """Direct image on both sides: (Γ ⊢ Δ) ↦ (σ[Γ] ⊢ σ[Δ])."""
    _same_language(sigma.source, q.language, "sen_translate")
    return Sequent(sigma.target, tuple(sigma.image(q.gamma)), tuple(sigma.image(q.delta)))


def dir_theory(sigma: SetFn, t: Theory) -> Theory:
    _same_language(sigma.source, t.language, "dir_theory")
    return Theory(sigma.target, frozenset(sen_translate(sigma, q) for q in t.sequents))


def inv_theory(sigma: SetFn, t: Theory) -> Theory:
    """All source sequents whose translation ``t`` entails."""
    _same_language(sigma.target, t.language, "inv_theory")
    n = len(sigma.source)
    bitsets.require_types(n, "max_closure_types")
    gammas, deltas = bitsets.sequent_pairs(n)
    image = bitsets.image_table(sigma.image_masks())
    keep = bitsets.satisfied_pairs(model_masks(t), image[gammas], image[deltas])
    return _sequents_from(sigma.source, gammas[keep], deltas[keep])


def is_theory_morphism(sigma: SetFn, t1: Theory, t2: Theory) -> TheoryMorphismWitness:
    """σ : T1 → T2 when T2 entails the translation of every generator of T1."""
    _same_language(sigma.source, t1.language, "is_theory_morphism source")
    _same_language(sigma.target, t2.language, "is_theory_morphism target")
    for q in t1:
        if not entails(t2, sen_translate(sigma, q)):
            return TheoryMorphismWitness(sigma, t1, t2, False, q)
    return TheoryMorphismWitness(sigma, t1, t2, True)


def theory_union(language: FinSet, theories: Iterable[Theory]) -> Theory:
    sequents = frozenset()
    for t in theories:
        _same_language(language, t.language, "theory_union")
        sequents |= t.sequents
    return Theory(language, sequents)


def th_colimit(d: Diagram) -> TheoryColimit:
    """Colimit of a diagram of theories: language colimit plus the union of direct images."""
    for edge in d.edges:
        witness = is_theory_morphism(edge.arrow, d[edge.src], d[edge.dst])
        if not witness.verdict:
            raise InvalidTheoryMorphismError(
                f"edge {edge.name!r} is not a theory morphism: "
                f"{witness.counterexample} translates to a sequent its target does not entail",
                edge=edge.name, counterexample=str(witness.counterexample),
            )
    cocone = set_colimit(d.map_nodes(lambda t: t.language, lambda f: f))
    theory = theory_union(cocone.apex, (dir_theory(cocone.legs[node], t) for node, t in d.items()))
    return TheoryColimit(theory, cocone)


def inv_theory_generators(sigma: SetFn, t: Theory) -> Theory:
    """A generator set entailment-equivalent to inv_theory(σ, t).

    Its models are the σ-reducts of the models of ``t``; every other source
    state is excluded by its characteristic sequent (s ⊢ Σ∖s). Needs 2^n
    states rather than 4^n sequents, so it serves languages above the
    closure cap.
    """
    _same_language(sigma.target, t.language, "inv_theory")
    n = len(sigma.source)
    bitsets.require_types(n)
    bits = sigma.image_masks()
    full = sigma.source.full_mask
    reducts = {
        sum(1 << i for i, bit in enumerate(bits) if int(s2) & bit)
        for s2 in model_masks(t)
    }
    excluded = [int(s) for s in bitsets.all_states(n) if int(s) not in reducts]
    return Theory(sigma.source, frozenset(Sequent.from_masks(sigma.source, s, full & ~s) for s in excluded))


def sen_preimages(sigma: SetFn, q: Sequent) -> Theory:
    """Every source sequent whose translation is exactly ``q``."""
    _same_language(sigma.target, q.language, "f_elim")
    n = len(sigma.source)
    bitsets.require_types(n, "max_closure_types")
    image = bitsets.image_table(sigma.image_masks())
    gamma, delta = q.masks
    gammas = np.flatnonzero(image == gamma)
    deltas = np.flatnonzero(image == delta)
    return Theory(sigma.source, frozenset(
        Sequent.from_masks(sigma.source, int(g), int(d)) for g in gammas for d in deltas
    ))


def relative_defeating_state(rows: Iterable[int], language: FinSet, premises: Iterable[Sequent],
                             conclusion: Sequent) -> Optional[StateDescription]:
    """First row satisfying every premise but not ``conclusion``.

    The intent of a structure has exactly its rows as models, so this decides
    intent ∪ premises ⊢ conclusion without materializing the intent.
    """
    bitsets.require_types(len(language))
    states = np.array(sorted(set(int(r) for r in rows)), dtype=np.int64)
    alive = np.ones(states.shape, dtype=bool)
    for q in premises:
        _same_language(language, q.language, "flow premise")
        alive &= bitsets.row_satisfies(states, *q.masks)
    _same_language(language, conclusion.language, "flow conclusion")
    bad = states[alive & ~bitsets.row_satisfies(states, *conclusion.masks)]
    return StateDescription.from_mask(language, int(bad[0])) if len(bad) else None
