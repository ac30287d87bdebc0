"""
The IFC environment: languages are finite sets, structures are
classifications, sentences are sequents.
"""

from typing import Iterable, Optional

from ..core.config import get_config
from ..data.classification import Classification, Infomorphism
from ..data.finset import FinSet, SetFn
from ..data.sequent import Sequent, StateDescription, Theory
from ..kernel import cls, th
from ..utils import bitsets
from .base import LogicalEnvironment

_KINDS = (
    ("language", FinSet),
    ("language_morphism", SetFn),
    ("structure", Classification),
    ("structure_morphism", Infomorphism),
    ("sentence", Sequent),
)


class IFCEnvironment(LogicalEnvironment):
    """Bindings of the environment interface to the cls and th kernels."""

    name = "IFC"

    def language_of(self, structure: Classification) -> FinSet:
        return structure.types

    def same_language(self, left: FinSet, right: FinSet) -> bool:
        return left == right

    def identity(self, language: FinSet) -> SetFn:
        return SetFn.identity(language)

    def compose(self, first: SetFn, second: SetFn) -> SetFn:
        return first.then(second)

    def sentences(self, language: FinSet) -> Iterable[Sequent]:
        bitsets.require_types(len(language), "max_closure_types")
        gammas, deltas = bitsets.sequent_pairs(len(language))
        for g, d in zip(gammas, deltas):
            yield Sequent.from_masks(language, int(g), int(d))

    def translate(self, sigma: SetFn, sentence: Sequent) -> Sequent:
        return th.sen_translate(sigma, sentence)

    def reduct(self, sigma: SetFn, structure: Classification) -> Classification:
        return cls.reduct(sigma, structure)

    def satisfies(self, structure: Classification, sentence: Sequent) -> bool:
        return cls.satisfies(structure, sentence)

    def entails(self, theory: Theory, sentence: Sequent) -> bool:
        return th.entails(theory, sentence)

    def is_structure_morphism(self, morphism: Infomorphism) -> bool:
        return cls.check_infomorphism(morphism)

    def kind_of(self, value: object) -> Optional[str]:
        for kind, cls_ in _KINDS:
            if isinstance(value, cls_):
                return kind
        return None

    def theory(self, language: FinSet, sentences: Iterable[Sequent]) -> Theory:
        return Theory(language, frozenset(sentences))

    # Vectorized equivalents of the semantic defaults

    def intent(self, structure: Classification) -> Theory:
        return cls.intent(structure)

    def closure(self, theory: Theory) -> Theory:
        return th.closure(theory)

    def theory_leq(self, t1: Theory, t2: Theory) -> bool:
        return th.theory_leq(t1, t2)

    def structure_leq(self, m1: Classification, m2: Classification) -> bool:
        return cls.structure_leq(m1, m2)

    def direct_image(self, sigma: SetFn, theory: Theory) -> Theory:
        return th.dir_theory(sigma, theory)

    def inverse_image(self, sigma: SetFn, theory: Theory) -> Theory:
        if len(sigma.source) <= get_config().max_closure_types:
            return th.inv_theory(sigma, theory)
        return th.inv_theory_generators(sigma, theory)

    def preimages(self, sigma: SetFn, sentence: Sequent) -> Iterable[Sequent]:
        return th.sen_preimages(sigma, sentence).ordered()

    def is_complete(self, structure: Classification, theory: Theory) -> bool:
        # complete iff every model of the theory is a row of the structure
        return set(int(s) for s in th.model_masks(theory)) <= structure.row_set()

    def flow_counterexample(self, structure: Classification, premises: Iterable[Sequent],
                            conclusion: Sequent) -> Optional[StateDescription]:
        return th.relative_defeating_state(structure.row_masks(), structure.types, premises, conclusion)


IFC = IFCEnvironment()
