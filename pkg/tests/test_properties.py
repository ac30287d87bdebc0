"""
Property-based tests for the order-theoretic laws.

Each property draws a seed and builds its objects with the seeded
generators, so a shrunk failure is reproducible from one integer.
"""

import warnings

from hypothesis import given, settings
from hypothesis import strategies as st

from channelkit import (
    Diagram, DiagramEdge, LocalLogic, Theory, carries_info, closure, dir_logic, dir_theory, fiber_join,
    fiber_meet, inv_logic, inv_theory, is_logic_morphism, is_sound, is_theory_morphism, logic_leq,
    mediator_set, structure_leq, th_colimit, theory_leq,
)
from channelkit.data.sequent import Sequent
from channelkit.kernel.setcat import Cocone
from channelkit.kernel.th import theory_union
from channelkit.utils.fixtures import LANGUAGE_Y, LANGUAGE_Z, binary_channel
from channelkit.utils.generators import (
    random_classification, random_infomorphism, random_language, random_sequent, random_setfn,
    random_sound_logic, random_theory, rng_for,
)

SEEDS = st.integers(min_value=0, max_value=2 ** 32 - 1)
PROPERTY_SETTINGS = settings(max_examples=50, deadline=None)


def create_theories(rng, count, size=None):
    language = random_language(rng, int(rng.integers(1, 4)))
    return language, [random_theory(rng, language, size) for _ in range(count)]


class TestClosureLaws:
    """Closure is extensive, monotone and idempotent."""

    @PROPERTY_SETTINGS
    @given(SEEDS)
    def test_extensive_and_idempotent(self, seed):
        _, (t,) = create_theories(rng_for(seed), 1)
        c = closure(t)
        assert c.issuperset(t)
        assert closure(c) == c

    @PROPERTY_SETTINGS
    @given(SEEDS)
    def test_monotone(self, seed):
        rng = rng_for(seed)
        _, (t, extra) = create_theories(rng, 2)
        assert closure(t.union(extra)).issuperset(closure(t))


class TestPreorders:
    """The theory and structure orders are preorders."""

    @PROPERTY_SETTINGS
    @given(SEEDS)
    def test_theory_order(self, seed):
        _, (t1, t2, t3) = create_theories(rng_for(seed), 3)
        assert theory_leq(t1, t1)
        if theory_leq(t1, t2) and theory_leq(t2, t3):
            assert theory_leq(t1, t3)
        assert theory_leq(t1.union(t2), t1)

    @PROPERTY_SETTINGS
    @given(SEEDS)
    def test_structure_order(self, seed):
        rng = rng_for(seed)
        language = random_language(rng, int(rng.integers(1, 4)))
        m1, m2, m3 = (random_classification(rng, language, int(rng.integers(0, 4))) for _ in range(3))
        assert structure_leq(m1, m1)
        if structure_leq(m1, m2) and structure_leq(m2, m3):
            assert structure_leq(m1, m3)


class TestImageLaws:
    """Direct and inverse images are the extreme logics an infomorphism connects."""

    @PROPERTY_SETTINGS
    @given(SEEDS)
    def test_direct_image_is_greatest(self, seed):
        rng = rng_for(seed)
        f = random_infomorphism(rng)
        l1 = LocalLogic.over(f.source, random_theory(rng, f.source.types))
        image = dir_logic(f, l1)
        assert is_logic_morphism(f, l1, image).verdict
        l2 = LocalLogic.over(f.target, random_theory(rng, f.target.types))
        if is_logic_morphism(f, l1, l2).verdict:
            assert logic_leq(l2, image)

    @PROPERTY_SETTINGS
    @given(SEEDS)
    def test_inverse_image_is_least(self, seed):
        rng = rng_for(seed)
        f = random_infomorphism(rng)
        l2 = LocalLogic.over(f.target, random_theory(rng, f.target.types))
        pulled = inv_logic(f, l2)
        assert is_logic_morphism(f, pulled, l2).verdict
        l1 = LocalLogic.over(f.source, random_theory(rng, f.source.types))
        if is_logic_morphism(f, l1, l2).verdict:
            assert logic_leq(pulled, l1)

    @PROPERTY_SETTINGS
    @given(SEEDS)
    def test_direct_image_of_sound_logic_is_sound(self, seed):
        rng = rng_for(seed)
        f = random_infomorphism(rng)
        assert is_sound(dir_logic(f, random_sound_logic(rng, f.source)))


class TestFiberLattice:
    """Meet and join bound their inputs and are extreme among bounds."""

    @PROPERTY_SETTINGS
    @given(SEEDS)
    def test_meet_is_greatest_lower_bound(self, seed):
        rng = rng_for(seed)
        language = random_language(rng, int(rng.integers(1, 4)))
        m = random_classification(rng, language, int(rng.integers(0, 4)))
        logics = [LocalLogic.over(m, random_theory(rng, language)) for _ in range(int(rng.integers(1, 4)))]
        met = fiber_meet(logics)
        assert all(logic_leq(met, l) for l in logics)
        for _ in range(5):
            candidate = LocalLogic.over(m, random_theory(rng, language, size=int(rng.integers(0, 6))))
            if all(logic_leq(candidate, l) for l in logics):
                assert logic_leq(candidate, met)

    @PROPERTY_SETTINGS
    @given(SEEDS)
    def test_join_is_least_upper_bound(self, seed):
        rng = rng_for(seed)
        language = random_language(rng, int(rng.integers(1, 4)))
        m = random_classification(rng, language, int(rng.integers(0, 4)))
        logics = [LocalLogic.over(m, random_theory(rng, language)) for _ in range(int(rng.integers(1, 4)))]
        joined = fiber_join(logics)
        assert all(logic_leq(l, joined) for l in logics)
        for _ in range(5):
            candidate = LocalLogic.over(m, random_theory(rng, language, size=int(rng.integers(0, 3))))
            if all(logic_leq(l, candidate) for l in logics):
                assert logic_leq(joined, candidate)


def create_signature_map(rng):
    source = random_language(rng, int(rng.integers(0, 4)))
    target = random_language(rng, int(rng.integers(1, 4)), "z")
    return random_setfn(rng, source, target)


class TestTheoryImageOrder:
    """Direct and inverse images along a language map are monotone and adjoint."""

    @PROPERTY_SETTINGS
    @given(SEEDS)
    def test_direct_image_is_monotone(self, seed):
        rng = rng_for(seed)
        s = create_signature_map(rng)
        weaker = random_theory(rng, s.source)
        stronger = weaker.union(random_theory(rng, s.source))
        assert theory_leq(stronger, weaker)
        assert theory_leq(dir_theory(s, stronger), dir_theory(s, weaker))

    @PROPERTY_SETTINGS
    @given(SEEDS)
    def test_inverse_image_is_monotone(self, seed):
        rng = rng_for(seed)
        s = create_signature_map(rng)
        weaker = random_theory(rng, s.target)
        stronger = weaker.union(random_theory(rng, s.target))
        assert theory_leq(inv_theory(s, stronger), inv_theory(s, weaker))

    @PROPERTY_SETTINGS
    @given(SEEDS)
    def test_images_are_adjoint(self, seed):
        rng = rng_for(seed)
        s = create_signature_map(rng)
        t1, t2 = random_theory(rng, s.source), random_theory(rng, s.target)
        assert theory_leq(t2, dir_theory(s, t1)) == theory_leq(inv_theory(s, t2), t1)
        assert theory_leq(inv_theory(s, dir_theory(s, t1)), t1)
        assert theory_leq(t2, dir_theory(s, inv_theory(s, t2)))


def create_theory_span(rng):
    """t1 <- t0 -> t2 with each leg a theory morphism by construction."""
    l0 = random_language(rng, int(rng.integers(1, 3)), "a")
    l1 = random_language(rng, int(rng.integers(1, 4)), "b")
    l2 = random_language(rng, int(rng.integers(1, 4)), "c")
    s1, s2 = random_setfn(rng, l0, l1), random_setfn(rng, l0, l2)
    t0 = random_theory(rng, l0)
    t1 = dir_theory(s1, t0).union(random_theory(rng, l1))
    t2 = dir_theory(s2, t0).union(random_theory(rng, l2))
    return Diagram(
        (("t0", t0), ("t1", t1), ("t2", t2)),
        (DiagramEdge("e1", "t0", "t1", s1), DiagramEdge("e2", "t0", "t2", s2)),
    )


class TestTheoryColimitMediator:
    """Every cocone under a theory diagram factors through the colimit exactly once."""

    @PROPERTY_SETTINGS
    @given(SEEDS)
    def test_mediator_exists_and_is_unique(self, seed):
        rng = rng_for(seed)
        d = create_theory_span(rng)
        colim = th_colimit(d)
        apex = random_language(rng, int(rng.integers(1, 4)), "w")
        g = random_setfn(rng, colim.cocone.apex, apex)
        other = Cocone(colim.cocone.diagram, apex,
                       {node: leg.then(g) for node, leg in colim.cocone.legs.items()})
        other_theory = theory_union(apex, (dir_theory(other.legs[node], t) for node, t in d.items()))

        med = mediator_set(colim.cocone, other)
        assert med == g
        for node, leg in colim.cocone.legs.items():
            assert leg.then(med) == other.legs[node]
        assert is_theory_morphism(med, colim.theory, other_theory).verdict

        for _ in range(5):
            h = random_setfn(rng, colim.cocone.apex, apex)
            agrees = all(leg.then(h) == other.legs[node] for node, leg in colim.cocone.legs.items())
            assert agrees == (h == med)


class TestFlowMonotonicity:
    @PROPERTY_SETTINGS
    @given(SEEDS)
    def test_stronger_premise_keeps_flow(self, seed):
        rng = rng_for(seed)
        ch = binary_channel()
        weak = random_sequent(rng, LANGUAGE_Y)
        # dropping conclusions strengthens a sequent
        strong = Sequent(LANGUAGE_Y, weak.gamma, weak.delta[:1])
        target = random_sequent(rng, LANGUAGE_Z)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            if carries_info(ch, "M", weak, "D", target):
                assert carries_info(ch, "M", strong, "D", target)

    @PROPERTY_SETTINGS
    @given(SEEDS)
    def test_empty_theory_is_top(self, seed):
        _, (t,) = create_theories(rng_for(seed), 1)
        assert theory_leq(t, Theory(t.language))
