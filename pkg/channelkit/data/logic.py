"""
Local logics ⟨Σ, M, T⟩.
"""

from dataclasses import dataclass

from ..core.errors import LanguageMismatchError
from .classification import Classification
from .finset import FinSet
from .sequent import Theory


@dataclass(frozen=True)
class LocalLogic:
    """A language, a structure over it and a theory over it."""

    language: FinSet
    structure: Classification
    theory: Theory

    def __post_init__(self):
        if self.structure.types != self.language:
            raise LanguageMismatchError("logic structure is not over the logic language")
        if self.theory.language != self.language:
            raise LanguageMismatchError("logic theory is not over the logic language")

    @classmethod
    def over(cls, structure: Classification, theory: Theory) -> "LocalLogic":
        return cls(structure.types, structure, theory)

    def with_theory(self, theory: Theory) -> "LocalLogic":
        return LocalLogic(self.language, self.structure, theory)
