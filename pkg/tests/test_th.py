"""
Tests for sequent entailment, closure, translation and theory colimits.
"""

import pytest

from channelkit import (
    CapExceededError, Diagram, DiagramEdge, FinSet, InvalidTheoryMorphismError, LanguageMismatchError,
    SequentOutOfLanguageError, SetFn, StateDescription, Theory, UsageError, closure, defeating_state,
    dir_theory, entails, inv_theory, is_theory_morphism, models, row_satisfies, sen_translate,
    th_colimit, theory_equiv, theory_leq, use_config,
)
from channelkit.kernel.th import inv_theory_generators, sen_preimages
from channelkit.utils.fixtures import (
    LANGUAGE_Y, LANGUAGE_Z, PUSHOUT_LANGUAGES, pushout_theories, sequent, sigma, theory_t1,
)
from channelkit.utils.generators import random_setfn, random_language, random_theory, rng_for


def create_pushout_theory_diagram():
    t = pushout_theories()
    t0, t1, t2 = PUSHOUT_LANGUAGES["t0"], PUSHOUT_LANGUAGES["t1"], PUSHOUT_LANGUAGES["t2"]
    return Diagram(
        (("t0", t["t0"]), ("t1", t["t1"]), ("t2", t["t2"])),
        (
            DiagramEdge("e1", "t0", "t1", SetFn.from_mapping(t0, t1, {"m": "b"})),
            DiagramEdge("e2", "t0", "t2", SetFn.from_mapping(t0, t2, {"m": "b'"})),
        ),
    )


class TestSequents:
    """Test sequent parsing and rendering."""

    def test_parse_sorts_and_deduplicates(self):
        q = sequent(LANGUAGE_Y, "b a b |- ")
        assert q.gamma == ("a", "b")
        assert q.delta == ()
        assert str(q) == "a b |-"

    def test_empty_sequent_renders_as_turnstile(self):
        assert str(sequent(LANGUAGE_Y, "|-")) == "|-"
        assert str(sequent(LANGUAGE_Y, "|- a")) == "|- a"

    def test_unknown_type_rejected(self):
        with pytest.raises(SequentOutOfLanguageError):
            sequent(LANGUAGE_Y, "a |- q")

    def test_literal_needs_one_turnstile(self):
        with pytest.raises(UsageError):
            sequent(LANGUAGE_Y, "a b")

    def test_theory_language_checked(self):
        with pytest.raises(LanguageMismatchError):
            Theory.of(LANGUAGE_Z, sequent(LANGUAGE_Y, "|- a"))

    def test_row_satisfaction(self):
        q = sequent(LANGUAGE_Y, "a |- b")
        assert not row_satisfies(StateDescription(LANGUAGE_Y, ("a",)), q)
        assert row_satisfies(StateDescription(LANGUAGE_Y, ("a", "b")), q)
        assert row_satisfies(StateDescription(LANGUAGE_Y), q)


class TestEntailment:
    """Test entailment over state descriptions."""

    def test_t1_has_only_the_empty_model(self):
        t1 = theory_t1()
        assert [str(s) for s in models(t1)] == ["{}"]
        assert entails(t1, sequent(LANGUAGE_Y, "a |-"))

    def test_empty_theory_does_not_entail_empty_sequent(self):
        empty = Theory(LANGUAGE_Y)
        assert not entails(empty, sequent(LANGUAGE_Y, "|-"))
        assert str(defeating_state(empty, sequent(LANGUAGE_Y, "|-"))) == "{}"

    def test_identity_and_weakening(self):
        empty = Theory(LANGUAGE_Y)
        assert entails(empty, sequent(LANGUAGE_Y, "a |- a"))
        assert entails(empty, sequent(LANGUAGE_Y, "a b |- a"))
        assert entails(Theory.of(LANGUAGE_Y, sequent(LANGUAGE_Y, "|- a")), sequent(LANGUAGE_Y, "b |- a"))

    def test_cut(self):
        t = Theory.of(LANGUAGE_Y, sequent(LANGUAGE_Y, "|- a"), sequent(LANGUAGE_Y, "a |- b"))
        assert entails(t, sequent(LANGUAGE_Y, "|- b"))

    def test_inconsistent_theory_entails_everything(self):
        bottom = Theory.of(LANGUAGE_Y, sequent(LANGUAGE_Y, "|-"))
        assert models(bottom) == []
        assert entails(bottom, sequent(LANGUAGE_Y, "a |-"))

    def test_language_mismatch(self):
        with pytest.raises(LanguageMismatchError):
            entails(theory_t1(), sequent(LANGUAGE_Z, "|- p"))

    def test_entailment_cap(self):
        language = FinSet(tuple(f"y{i}" for i in range(3)))
        with use_config(max_types=2):
            with pytest.raises(CapExceededError) as info:
                entails(Theory(language), sequent(language, "|-"))
        assert info.value.flag == "--max-types"


class TestClosure:
    """Test theory closure."""

    def test_closure_of_empty_theory_over_one_type(self):
        a = FinSet.of("a")
        assert closure(Theory(a)) == Theory.of(a, sequent(a, "a |- a"))

    def test_closure_contains_generators_and_is_idempotent(self):
        t1 = theory_t1()
        c = closure(t1)
        assert c.issuperset(t1)
        assert closure(c) == c
        assert theory_equiv(c, t1)

    def test_closure_cap(self):
        language = FinSet(tuple(f"y{i}" for i in range(3)))
        with use_config(max_closure_types=2):
            with pytest.raises(CapExceededError) as info:
                closure(Theory(language))
        assert info.value.flag == "--max-closure-types"


class TestTheoryOrder:
    def test_more_sequents_is_smaller(self):
        empty = Theory(LANGUAGE_Y)
        assert theory_leq(theory_t1(), empty)
        assert not theory_leq(empty, theory_t1())

    def test_equivalent_generators(self):
        t = Theory.of(LANGUAGE_Y, sequent(LANGUAGE_Y, "|- a"), sequent(LANGUAGE_Y, "a |- b"))
        u = Theory.of(LANGUAGE_Y, sequent(LANGUAGE_Y, "|- a"), sequent(LANGUAGE_Y, "|- b"))
        assert theory_equiv(t, u)
        assert t != u


class TestTranslation:
    """Test translation of sequents and theories along language maps."""

    def test_sen_translate_takes_direct_images(self):
        q = sen_translate(sigma(), sequent(LANGUAGE_Y, "a b |- b"))
        assert str(q) == "p |- p"

    def test_dir_theory(self):
        t = dir_theory(sigma(), theory_t1())
        assert t.language == LANGUAGE_Z
        assert {str(q) for q in t} == {"p |- p", "p |-"}

    def test_inv_theory_of_top(self):
        z_top = Theory.of(LANGUAGE_Z, sequent(LANGUAGE_Z, "|- p"))
        inv = inv_theory(sigma(), z_top)
        assert sequent(LANGUAGE_Y, "|- a b") in inv
        assert sequent(LANGUAGE_Y, "|- a") in inv
        assert sequent(LANGUAGE_Y, "a |-") not in inv

    def test_inv_generators_are_equivalent_to_inv(self):
        rng = rng_for(11)
        for _ in range(25):
            source = random_language(rng, int(rng.integers(0, 4)), "y")
            target = random_language(rng, int(rng.integers(1, 4)), "z")
            f = random_setfn(rng, source, target)
            t = random_theory(rng, target)
            assert theory_equiv(inv_theory(f, t), inv_theory_generators(f, t))

    def test_sen_preimages(self):
        pre = sen_preimages(sigma(), sequent(LANGUAGE_Z, "|- p"))
        assert {str(q) for q in pre} == {"|- a", "|- b", "|- a b"}

    def test_theory_morphism_witness(self):
        z_top = Theory.of(LANGUAGE_Z, sequent(LANGUAGE_Z, "|- p"))
        assert is_theory_morphism(sigma(), Theory.of(LANGUAGE_Y, sequent(LANGUAGE_Y, "|- a")), z_top).verdict
        witness = is_theory_morphism(sigma(), theory_t1(), z_top)
        assert not witness.verdict
        assert witness.counterexample == sequent(LANGUAGE_Y, "b |-")


class TestTheoryColimit:
    """Test colimits of theory diagrams."""

    def test_pushout(self):
        colim = th_colimit(create_pushout_theory_diagram())
        assert [str(q) for q in colim.theory] == ["|- m@t0", "m@t0 |- c@t2"]
        assert entails(colim.theory, sequent(colim.theory.language, "|- c@t2"))

    def test_legs_are_theory_morphisms(self):
        d = create_pushout_theory_diagram()
        colim = th_colimit(d)
        for node, t in d.items():
            assert is_theory_morphism(colim.cocone.legs[node], t, colim.theory).verdict

    def test_empty_diagram(self):
        colim = th_colimit(Diagram())
        assert len(colim.theory.language) == 0
        assert len(colim.theory) == 0

    def test_non_morphism_edge_rejected(self):
        a = FinSet.of("a")
        strong = Theory.of(a, sequent(a, "|- a"))
        d = Diagram((("s", strong), ("t", Theory(a))), (DiagramEdge("e", "s", "t", SetFn.identity(a)),))
        with pytest.raises(InvalidTheoryMorphismError):
            th_colimit(d)
