"""
Local logics: the natural logic of a structure, soundness and completeness,
logic morphisms, direct and inverse images, and meets in a logic fiber.

Every operation takes the logical environment it works in; the default is
IFC, where structures are classifications and sentences are sequents.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

import numpy as np

from ..core.config import get_config
from ..core.errors import LanguageMismatchError, StructureMismatchError, UsageError
from ..data.classification import Classification, Infomorphism
from ..data.logic import LocalLogic
from ..data.sequent import Sequent
from ..environments.base import LogicalEnvironment
from ..environments.ifc import IFC
from ..utils import bitsets
from . import cls, th


@dataclass(frozen=True)
class LogicMorphismWitness:
    """Verdict for f : L1 → L2.

    ``reason`` is "structure" when f breaks the fundamental condition (see
    ``violation``) and "theory" when L2 fails to entail the translation of
    ``counterexample``.
    """

    infomorphism: Infomorphism
    source: LocalLogic
    target: LocalLogic
    verdict: bool
    reason: Optional[str] = None
    violation: Optional[Tuple[str, str]] = None
    counterexample: Optional[Sequent] = None

    def __bool__(self) -> bool:
        return self.verdict


def natural_logic(m: Classification, env: LogicalEnvironment = IFC) -> LocalLogic:
    """log(M) = ⟨Σ, M, intent(M)⟩, sound and complete by construction."""
    return LocalLogic(env.language_of(m), m, env.intent(m))


def is_sound(l: LocalLogic, env: LogicalEnvironment = IFC) -> bool:
    return env.satisfies_all(l.structure, l.theory)


def soundness_witness(l: LocalLogic) -> Optional[Tuple[Sequent, str]]:
    """First (sequent, instance) with the instance falsifying a sequent of the theory."""
    for q in l.theory:
        x = cls.counterexample_instance(l.structure, q)
        if x is not None:
            return q, x
    return None


def is_complete(l: LocalLogic, env: LogicalEnvironment = IFC) -> bool:
    return env.is_complete(l.structure, l.theory)


def completeness_witness(l: LocalLogic) -> Optional[Sequent]:
    """A sequent valid in the structure that the theory does not entail.

    Within the closure cap this is the smallest such sequent; above it, the
    characteristic sequent (s ⊢ Σ∖s) of the first model of the theory that
    is not a row of the structure.
    """
    rows = l.structure.row_set()
    missing = [int(s) for s in th.model_masks(l.theory) if int(s) not in rows]
    if not missing:
        return None
    n = len(l.language)
    if n <= get_config().max_closure_types:
        gammas, deltas = bitsets.sequent_pairs(n)
        valid = bitsets.satisfied_pairs(rows, gammas, deltas)
        entailed = bitsets.satisfied_pairs(missing, gammas, deltas)
        k = int(np.flatnonzero(valid & ~entailed)[0])
        return Sequent.from_masks(l.language, int(gammas[k]), int(deltas[k]))
    s = missing[0]
    return Sequent.from_masks(l.language, s, l.language.full_mask & ~s)


def _check_structures(f: Infomorphism, l1: Optional[LocalLogic], l2: Optional[LocalLogic]) -> None:
    if l1 is not None and f.source != l1.structure:
        raise StructureMismatchError("infomorphism source is not the structure of the source logic")
    if l2 is not None and f.target != l2.structure:
        raise StructureMismatchError("infomorphism target is not the structure of the target logic")


def is_logic_morphism(f: Infomorphism, l1: LocalLogic, l2: LocalLogic,
                      env: LogicalEnvironment = IFC) -> LogicMorphismWitness:
    """f is a logic morphism when it is a valid structure morphism whose
    language morphism is a theory morphism l1.theory → l2.theory."""
    _check_structures(f, l1, l2)
    if not env.is_structure_morphism(f):
        return LogicMorphismWitness(f, l1, l2, False, "structure", violation=f.violation())
    sigma = env.underlying_morphism(f)
    for q in l1.theory:
        if not env.entails(l2.theory, env.translate(sigma, q)):
            return LogicMorphismWitness(f, l1, l2, False, "theory", counterexample=q)
    return LogicMorphismWitness(f, l1, l2, True)


def natural_logic_morphism(f: Infomorphism, env: LogicalEnvironment = IFC) -> LogicMorphismWitness:
    """f read as a morphism log(source) → log(target)."""
    return is_logic_morphism(f, natural_logic(f.source, env), natural_logic(f.target, env), env)


def dir_logic(f: Infomorphism, l1: LocalLogic, env: LogicalEnvironment = IFC) -> LocalLogic:
    """The greatest logic on the target structure that f reaches from l1."""
    _check_structures(f, l1, None)
    return LocalLogic(env.language_of(f.target), f.target,
                      env.direct_image(env.underlying_morphism(f), l1.theory))


def inv_logic(f: Infomorphism, l2: LocalLogic, env: LogicalEnvironment = IFC) -> LocalLogic:
    """The least logic on the source structure from which f reaches l2."""
    _check_structures(f, None, l2)
    return LocalLogic(env.language_of(f.source), f.source,
                      env.inverse_image(env.underlying_morphism(f), l2.theory))


def logic_leq(l1: LocalLogic, l2: LocalLogic, env: LogicalEnvironment = IFC) -> bool:
    """Componentwise order: structures by intent, theories by extent."""
    if not env.same_language(l1.language, l2.language):
        raise LanguageMismatchError(f"logic_leq: languages {l1.language} and {l2.language} differ")
    return env.structure_leq(l1.structure, l2.structure) and env.theory_leq(l1.theory, l2.theory)


def _same_fiber(logics: Iterable[LocalLogic], what: str) -> List[LocalLogic]:
    logics = list(logics)
    if not logics:
        raise UsageError(f"{what} needs at least one logic")
    first = logics[0]
    for l in logics[1:]:
        if l.language != first.language or l.structure != first.structure:
            raise StructureMismatchError(f"{what}: logics live over different structures")
    return logics


def fiber_meet(logics: Iterable[LocalLogic], env: LogicalEnvironment = IFC) -> LocalLogic:
    """Greatest lower bound over one structure: the union of the theories
    (its extent is the intersection of the extents)."""
    logics = _same_fiber(logics, "fiber_meet")
    first = logics[0]
    union = env.theory(first.language, (q for l in logics for q in l.theory))
    return first.with_theory(union)


def fiber_join(logics: Iterable[LocalLogic], env: LogicalEnvironment = IFC) -> LocalLogic:
    """Least upper bound over one structure: the common consequences."""
    logics = _same_fiber(logics, "fiber_join")
    first = logics[0]
    common = None
    for l in logics:
        consequences = set(env.closure(l.theory))
        common = consequences if common is None else common & consequences
    return first.with_theory(env.theory(first.language, common))


def soundness_unit(l: LocalLogic, env: LogicalEnvironment = IFC) -> Optional[LogicMorphismWitness]:
    """The identity as a logic morphism l → log(M), present iff l is sound."""
    witness = is_logic_morphism(Infomorphism.identity(l.structure), l, natural_logic(l.structure, env), env)
    return witness if witness.verdict else None


def completeness_counit(l: LocalLogic, env: LogicalEnvironment = IFC) -> Optional[LogicMorphismWitness]:
    """The identity as a logic morphism log(M) → l, present iff l is complete."""
    witness = is_logic_morphism(Infomorphism.identity(l.structure), natural_logic(l.structure, env), l, env)
    return witness if witness.verdict else None
