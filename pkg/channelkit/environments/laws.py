"""
Law checks for logical environments.

An environment is only trustworthy if satisfaction is invariant under
translation, translation and reduct are functorial, and structure morphisms
behave as flat morphisms. The checks run over a finite probe of structures,
morphisms and sentences and report pass/fail per law with the first witness.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence

from ..core.errors import IllTypedProbeError
from ..utils.reporting import log
from .base import LogicalEnvironment

LAWS = (
    "satisfaction_invariance",
    "identity_neutrality",
    "functoriality",
    "flat_bimodularity",
    "structure_morphisms_flat",
)


@dataclass(frozen=True)
class EnvironmentProbe:
    """Finite sample the laws are checked on.

    With ``exhaustive`` set, every sentence of each language is used instead
    of the listed ones.
    """

    structures: Sequence[Any] = ()
    language_morphisms: Sequence[Any] = ()
    structure_morphisms: Sequence[Any] = ()
    sentences: Sequence[Any] = ()
    exhaustive: bool = False


@dataclass
class LawResult:
    law: str
    passed: bool = True
    checked: int = 0
    witness: Optional[Dict[str, str]] = None

    def fail(self, **witness: Any) -> None:
        if self.passed:
            self.passed = False
            self.witness = {k: str(v) for k, v in witness.items()}

    def to_dict(self) -> Dict[str, Any]:
        return {"law": self.law, "passed": self.passed, "checked": self.checked, "witness": self.witness}


@dataclass
class EnvironmentLawReport:
    environment: str
    results: List[LawResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, law: str) -> LawResult:
        for r in self.results:
            if r.law == law:
                return r
        raise KeyError(law)

    def failures(self) -> List[LawResult]:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {"environment": self.environment, "passed": self.passed,
                "laws": [r.to_dict() for r in self.results]}


def _typecheck(env: LogicalEnvironment, probe: EnvironmentProbe) -> None:
    groups = (
        ("structures", probe.structures, "structure"),
        ("language_morphisms", probe.language_morphisms, "language_morphism"),
        ("structure_morphisms", probe.structure_morphisms, "structure_morphism"),
        ("sentences", probe.sentences, "sentence"),
    )
    for group, values, expected in groups:
        for k, value in enumerate(values):
            if env.kind_of(value) != expected:
                raise IllTypedProbeError(
                    f"probe {group}[{k}] is not a {expected.replace('_', ' ')} of the {env.name} environment",
                    group=group, position=k,
                )


class _Sentences:
    """Sentences over a language: the probe's own, or all of them."""

    def __init__(self, env: LogicalEnvironment, probe: EnvironmentProbe):
        self.env = env
        self.probe = probe
        self._cache: List[Any] = []

    def over(self, language: Any) -> List[Any]:
        for known, sentences in self._cache:
            if self.env.same_language(known, language):
                return sentences
        if self.probe.exhaustive:
            sentences = list(self.env.sentences(language))
        else:
            sentences = [s for s in self.probe.sentences
                         if self.env.same_language(self.env.sentence_language(s), language)]
        self._cache.append((language, sentences))
        return sentences


def _over(env: LogicalEnvironment, structures: Iterable[Any], language: Any) -> List[Any]:
    return [m for m in structures if env.same_language(env.language_of(m), language)]


def _satisfaction_invariance(env, probe, sentences) -> LawResult:
    result = LawResult("satisfaction_invariance")
    for sigma in probe.language_morphisms:
        source, target = env.morphism_ends(sigma)
        for m2 in _over(env, probe.structures, target):
            reduct = env.reduct(sigma, m2)
            for s1 in sentences.over(source):
                result.checked += 1
                translated = env.translate(sigma, s1)
                if env.satisfies(reduct, s1) != env.satisfies(m2, translated):
                    result.fail(morphism=sigma, structure=m2, sentence=s1, translation=translated)
    return result


def _identity_neutrality(env, probe, sentences) -> LawResult:
    result = LawResult("identity_neutrality")
    for m in probe.structures:
        language = env.language_of(m)
        ident = env.identity(language)
        result.checked += 1
        if env.reduct(ident, m) != m:
            result.fail(structure=m, problem="reduct along the identity changes the structure")
        for s in sentences.over(language):
            result.checked += 1
            if env.translate(ident, s) != s:
                result.fail(sentence=s, problem="translation along the identity changes the sentence")
    return result


def _functoriality(env, probe, sentences) -> LawResult:
    result = LawResult("functoriality")
    for sigma in probe.language_morphisms:
        source, middle = env.morphism_ends(sigma)
        for tau in probe.language_morphisms:
            tau_source, target = env.morphism_ends(tau)
            if not env.same_language(middle, tau_source):
                continue
            both = env.compose(sigma, tau)
            for s in sentences.over(source):
                result.checked += 1
                if env.translate(both, s) != env.translate(tau, env.translate(sigma, s)):
                    result.fail(first=sigma, second=tau, sentence=s, problem="translation")
            for m3 in _over(env, probe.structures, target):
                result.checked += 1
                if env.reduct(both, m3) != env.reduct(sigma, env.reduct(tau, m3)):
                    result.fail(first=sigma, second=tau, structure=m3, problem="reduct")
    return result


def _flat_bimodularity(env, probe, sentences) -> LawResult:
    """Along a flat σ : M1 → M2, every sentence valid in M1 translates to one valid in M2."""
    result = LawResult("flat_bimodularity")
    for sigma in probe.language_morphisms:
        source, target = env.morphism_ends(sigma)
        for m2 in _over(env, probe.structures, target):
            reduct = env.reduct(sigma, m2)
            for m1 in _over(env, probe.structures, source):
                if not env.structure_leq(reduct, m1):
                    continue
                for s1 in sentences.over(source):
                    if not env.satisfies(m1, s1):
                        continue
                    result.checked += 1
                    if not env.satisfies(m2, env.translate(sigma, s1)):
                        result.fail(morphism=sigma, source=m1, target=m2, sentence=s1)
    return result


def _structure_morphisms_flat(env, probe, sentences) -> LawResult:
    result = LawResult("structure_morphisms_flat")
    for f in probe.structure_morphisms:
        if not env.is_structure_morphism(f):
            continue
        result.checked += 1
        source, target = env.morphism_ends(f)
        if not env.structure_leq(env.reduct(env.underlying_morphism(f), target), source):
            result.fail(morphism=f, problem="reduct of the target is not below the source")
    return result


_CHECKS = {
    "satisfaction_invariance": _satisfaction_invariance,
    "identity_neutrality": _identity_neutrality,
    "functoriality": _functoriality,
    "flat_bimodularity": _flat_bimodularity,
    "structure_morphisms_flat": _structure_morphisms_flat,
}


def check_environment_laws(env: LogicalEnvironment, probe: Optional[EnvironmentProbe] = None) -> EnvironmentLawReport:
    """Check every environment law on the probe; an empty probe passes vacuously."""
    probe = probe or EnvironmentProbe()
    _typecheck(env, probe)
    sentences = _Sentences(env, probe)
    report = EnvironmentLawReport(env.name)
    for law in LAWS:
        result = _CHECKS[law](env, probe, sentences)
        log(f"⚖️  {law}: {'pass' if result.passed else 'FAIL'} ({result.checked} checks)")
        report.results.append(result)
    return report
