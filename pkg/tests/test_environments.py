"""
Tests for logical environments and their laws.
"""

import pytest

from channelkit import (
    IFC, Classification, EnvironmentProbe, IFCEnvironment, IllTypedProbeError, LogicalEnvironment, SetFn,
    Sequent, carries_info, check_environment_laws, dir_logic, f_elim_candidates, fiber_join, inv_logic,
    is_complete, natural_logic, theory_equiv,
)
from channelkit.environments.laws import LAWS
from channelkit.utils.fixtures import (
    LANGUAGE_Y, LANGUAGE_Z, binary_channel, classification_m, classification_n, infomorphism_f, sequent,
    sigma,
)
from channelkit.utils.generators import (
    infomorphism_into, random_classification, random_complete_logic, random_language,
    random_sound_logic, rng_for,
)


class DroppingIFC(IFCEnvironment):
    """Translation that forgets all but the first conclusion."""

    name = "dropping"

    def translate(self, sigma, sentence):
        q = super().translate(sigma, sentence)
        return Sequent(q.language, q.gamma, q.delta[:1])


class DefinitionalIFC(IFCEnvironment):
    """IFC with every derived operation computed from its definition."""

    name = "definitional"
    intent = LogicalEnvironment.intent
    closure = LogicalEnvironment.closure
    theory_leq = LogicalEnvironment.theory_leq
    structure_leq = LogicalEnvironment.structure_leq
    direct_image = LogicalEnvironment.direct_image
    inverse_image = LogicalEnvironment.inverse_image
    preimages = LogicalEnvironment.preimages
    is_complete = LogicalEnvironment.is_complete
    flow_counterexample = LogicalEnvironment.flow_counterexample


def create_probe(exhaustive=False):
    m, n = classification_m(), classification_n()
    only_b = Classification.from_rows(("x",), LANGUAGE_Y, {"x": ["b"]})
    return EnvironmentProbe(
        structures=(m, n, only_b, Classification.empty(LANGUAGE_Y)),
        language_morphisms=(sigma(), SetFn.identity(LANGUAGE_Y), SetFn.identity(LANGUAGE_Z)),
        structure_morphisms=(infomorphism_f(),),
        sentences=(sequent(LANGUAGE_Y, "|- a b"), sequent(LANGUAGE_Y, "a |- b"), sequent(LANGUAGE_Z, "p |-")),
        exhaustive=exhaustive,
    )


class TestEnvironmentLaws:
    """Test the law checks."""

    def test_ifc_passes_on_probe(self):
        report = check_environment_laws(IFC, create_probe())
        assert report.passed
        assert [r.law for r in report.results] == list(LAWS)
        assert report["satisfaction_invariance"].checked > 0

    def test_ifc_passes_exhaustively(self):
        assert check_environment_laws(IFC, create_probe(exhaustive=True)).passed

    def test_empty_probe_passes_vacuously(self):
        report = check_environment_laws(IFC)
        assert report.passed
        assert all(r.checked == 0 for r in report.results)

    def test_dropping_translation_breaks_invariance(self):
        report = check_environment_laws(DroppingIFC(), create_probe())
        assert not report.passed
        failed = report["satisfaction_invariance"]
        assert not failed.passed
        assert failed.witness["sentence"] == "|- a b"

    def test_ill_typed_probe(self):
        probe = EnvironmentProbe(sentences=(classification_m(),))
        with pytest.raises(IllTypedProbeError):
            check_environment_laws(IFC, probe)

    def test_report_serializes(self):
        payload = check_environment_laws(IFC, create_probe()).to_dict()
        assert payload["environment"] == "IFC"
        assert len(payload["laws"]) == len(LAWS)


class TestRepresentationIndependence:
    """The vectorized IFC bindings agree with the definitional ones."""

    def setup_method(self):
        self.fast = IFC
        self.slow = DefinitionalIFC()

    def test_natural_logic_and_completeness(self):
        rng = rng_for(21)
        for _ in range(15):
            m = random_classification(rng, random_language(rng, int(rng.integers(1, 4))), int(rng.integers(0, 4)))
            assert natural_logic(m, self.fast).theory == natural_logic(m, self.slow).theory
            logic = random_sound_logic(rng, m)
            assert is_complete(logic, self.fast) == is_complete(logic, self.slow)
            complete = random_complete_logic(rng, m)
            assert is_complete(complete, self.fast) and is_complete(complete, self.slow)

    def test_images_and_join(self):
        rng = rng_for(22)
        for _ in range(10):
            target = random_classification(rng, random_language(rng, int(rng.integers(1, 3)), "z"),
                                           int(rng.integers(1, 4)), "u")
            f = infomorphism_into(rng, target, random_language(rng, int(rng.integers(1, 3))))
            source_logic = random_sound_logic(rng, f.source)
            target_logic = random_sound_logic(rng, f.target)
            assert dir_logic(f, source_logic, self.fast).theory == dir_logic(f, source_logic, self.slow).theory
            assert inv_logic(f, target_logic, self.fast).theory == inv_logic(f, target_logic, self.slow).theory
            joined = [fiber_join([source_logic, natural_logic(f.source)], env).theory
                      for env in (self.fast, self.slow)]
            assert theory_equiv(*joined)

    def test_elimination_candidates(self):
        q = sequent(LANGUAGE_Z, "|- p")
        assert f_elim_candidates(sigma(), q, self.fast) == f_elim_candidates(sigma(), q, self.slow)

    def test_flow_verdicts(self):
        ch = binary_channel()
        queries = [
            ("M", sequent(LANGUAGE_Y, "|- a"), "D", sequent(LANGUAGE_Z, "|- p")),
            ("M", sequent(LANGUAGE_Y, "|- a"), "M", sequent(LANGUAGE_Y, "|- b")),
            ("D", sequent(LANGUAGE_Z, "|- p"), "M", sequent(LANGUAGE_Y, "b |- a")),
        ]
        for i, a_i, j, a_j in queries:
            assert carries_info(ch, i, a_i, j, a_j, self.fast).carries == \
                carries_info(ch, i, a_i, j, a_j, self.slow).carries
