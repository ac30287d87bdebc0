"""
Base class for logical environments.

A logical environment packages languages, sentences, structures and
satisfaction, together with translation of sentences and reducts of
structures along language morphisms. Logic and channel operations are
written against this interface.
"""

from abc import ABC, abstractmethod
from typing import Any, Iterable, Optional, Tuple


class LogicalEnvironment(ABC):
    """Capabilities an environment must provide."""

    name: str = "abstract"

    @abstractmethod
    def language_of(self, structure: Any) -> Any:
        """Underlying language of a structure."""
        pass

    @abstractmethod
    def same_language(self, left: Any, right: Any) -> bool:
        pass

    @abstractmethod
    def identity(self, language: Any) -> Any:
        """Identity language morphism."""
        pass

    @abstractmethod
    def compose(self, first: Any, second: Any) -> Any:
        """Language morphism ``first`` followed by ``second``."""
        pass

    @abstractmethod
    def sentences(self, language: Any) -> Iterable[Any]:
        """Every sentence over a language (finite in decidable environments)."""
        pass

    @abstractmethod
    def translate(self, sigma: Any, sentence: Any) -> Any:
        """Sentence translation along a language morphism."""
        pass

    @abstractmethod
    def reduct(self, sigma: Any, structure: Any) -> Any:
        """Structure translation against a language morphism."""
        pass

    @abstractmethod
    def satisfies(self, structure: Any, sentence: Any) -> bool:
        pass

    @abstractmethod
    def entails(self, theory: Any, sentence: Any) -> bool:
        """Semantic consequence: every structure satisfying the theory satisfies the sentence."""
        pass

    @abstractmethod
    def is_structure_morphism(self, morphism: Any) -> bool:
        pass

    @abstractmethod
    def kind_of(self, value: Any) -> Optional[str]:
        """One of "language", "language_morphism", "structure", "structure_morphism",
        "sentence", or None when the value belongs to no sort of this environment."""
        pass

    def sentence_language(self, sentence: Any) -> Any:
        return sentence.language

    def morphism_ends(self, sigma: Any) -> Tuple[Any, Any]:
        return sigma.source, sigma.target

    def underlying_morphism(self, morphism: Any) -> Any:
        """Language morphism of a structure morphism."""
        return morphism.type_map

    def satisfies_all(self, structure: Any, sentences: Iterable[Any]) -> bool:
        return all(self.satisfies(structure, s) for s in sentences)

    @abstractmethod
    def theory(self, language: Any, sentences: Iterable[Any]) -> Any:
        """Theory over ``language`` generated by ``sentences``."""
        pass

    # Semantic defaults. Each follows its definition by enumerating
    # sentences; environments override them with faster equivalents.

    def intent(self, structure: Any) -> Any:
        language = self.language_of(structure)
        return self.theory(language, (s for s in self.sentences(language) if self.satisfies(structure, s)))

    def closure(self, theory: Any) -> Any:
        language = theory.language
        return self.theory(language, (s for s in self.sentences(language) if self.entails(theory, s)))

    def theory_leq(self, t1: Any, t2: Any) -> bool:
        """Extent order: t1 entails every sentence of t2."""
        return all(self.entails(t1, s) for s in t2)

    def structure_leq(self, m1: Any, m2: Any) -> bool:
        """Intent order: m1 satisfies everything m2 satisfies."""
        language = self.language_of(m1)
        return all(self.satisfies(m1, s) for s in self.sentences(language) if self.satisfies(m2, s))

    def direct_image(self, sigma: Any, theory: Any) -> Any:
        return self.theory(sigma.target, (self.translate(sigma, s) for s in theory))

    def inverse_image(self, sigma: Any, theory: Any) -> Any:
        return self.theory(sigma.source, (s for s in self.sentences(sigma.source)
                                          if self.entails(theory, self.translate(sigma, s))))

    def preimages(self, sigma: Any, sentence: Any) -> Iterable[Any]:
        return [s for s in self.sentences(sigma.source) if self.translate(sigma, s) == sentence]

    def is_complete(self, structure: Any, theory: Any) -> bool:
        return all(self.entails(theory, s) for s in self.sentences(self.language_of(structure))
                   if self.satisfies(structure, s))

    def flow_counterexample(self, structure: Any, premises: Iterable[Any], conclusion: Any) -> Any:
        """Witness that the intent of ``structure`` plus ``premises`` fails to entail ``conclusion``, else None."""
        language = self.language_of(structure)
        theory = self.theory(language, list(self.intent(structure)) + list(premises))
        return None if self.entails(theory, conclusion) else conclusion
