"""
Tests for channels: covering, minimal covers, fusion and flow.
"""

import warnings

import pytest

from channelkit import (
    Channel, DifferentSystemsError, DistributedSystem, IndexMismatchError, Infomorphism,
    NotCoveringError, StructureMismatchError, binary_flow, carries_info, entails, f_elim_candidates,
    f_intro, factor_fusion, fusion_logic, is_covering, is_refinement, logic_colimit, mediator,
    minimal_cover,
)
from channelkit.utils.fixtures import (
    LANGUAGE_Y, LANGUAGE_Z, binary_channel, classification_m, classification_n, classification_n2,
    infomorphism_f, pushout_logics, pushout_system, sequent, sigma,
)
from channelkit.utils.generators import refine_channel, rng_for


def create_swapped_channel():
    """Two copies of N' joined by the instance swap, with both legs the same map."""
    d = classification_n2()
    swap = Infomorphism.from_mappings(d, d, {"p": "p"}, {"u1": "u2", "u2": "u1"})
    system = DistributedSystem.build({"D": d, "E": d}, {"s": ("D", "E", swap)})
    leg = binary_channel().legs["D"]
    return Channel(system, leg.target, {"D": leg, "E": leg})


class TestCovering:
    def test_binary_channel_covers_discrete_system(self):
        assert is_covering(binary_channel())

    def test_swapped_channel_does_not_cover(self):
        ch = create_swapped_channel()
        assert not is_covering(ch)
        with pytest.raises(NotCoveringError) as info:
            fusion_logic(ch, {})
        assert info.value.edge == "s"

    def test_legs_must_match_nodes(self):
        ch = binary_channel()
        with pytest.raises(IndexMismatchError):
            Channel(ch.system, ch.core, {"M": ch.legs["M"]})


class TestMinimalCover:
    """Test the colimiting channel."""

    def test_pushout_minimal_cover(self):
        ch = minimal_cover(pushout_system())
        assert len(ch.core.types) == 3
        assert ch.core.instances.elements == ("(y,i1,j1)", "(y,i2,j1)")
        assert is_covering(ch)

    def test_single_node_is_its_own_core(self):
        m = classification_m()
        ch = minimal_cover(DistributedSystem.build({"M": m}))
        assert ch.core == m
        assert ch.legs["M"] == Infomorphism.identity(m)

    def test_mediator_to_itself_is_identity(self):
        ch = minimal_cover(pushout_system())
        assert mediator(ch, ch) == Infomorphism.identity(ch.core)

    def test_mediator_to_binary_channel(self):
        ch = binary_channel()
        r = mediator(minimal_cover(ch.system), ch)
        assert r.type_map.as_dict() == {"a@M": "a", "b@M": "b", "p@D": "p"}
        assert r.inst_map.as_dict() == {"k1": "(x1,u1)", "k2": "(x2,u2)"}
        assert is_refinement(r, minimal_cover(ch.system), ch)

    def test_mediator_recovers_refinement(self):
        rng = rng_for(3)
        minimal = minimal_cover(pushout_system())
        for _ in range(10):
            other, r = refine_channel(rng, minimal)
            assert mediator(minimal, other) == r

    def test_mediator_needs_same_system(self):
        with pytest.raises(DifferentSystemsError):
            mediator(minimal_cover(pushout_system()), binary_channel())


class TestFusion:
    """Test fusion of component logics."""

    def test_pushout_fusion(self):
        ch, fused = logic_colimit(pushout_system(), pushout_logics())
        assert [str(q) for q in fused.theory] == ["|- m@t0", "m@t0 |- c@t2"]
        assert entails(fused.theory, sequent(ch.core.types, "|- c@t2"))

    def test_fusion_factors_through_mediator(self):
        rng = rng_for(5)
        minimal = minimal_cover(pushout_system())
        logics = pushout_logics()
        for _ in range(5):
            other, _ = refine_channel(rng, minimal)
            assert factor_fusion(minimal, other, logics).theory == fusion_logic(other, logics).theory

    def test_logics_must_cover_every_node(self):
        logics = pushout_logics()
        del logics["t2"]
        with pytest.raises(IndexMismatchError):
            fusion_logic(minimal_cover(pushout_system()), logics)

    def test_logic_over_wrong_structure(self):
        logics = pushout_logics()
        logics["t0"], logics["t1"] = logics["t1"], logics["t0"]
        with pytest.raises(StructureMismatchError):
            fusion_logic(minimal_cover(pushout_system()), logics)


class TestFlow:
    """Test flow queries across a channel."""

    def test_binary_flow_carries(self):
        ch = binary_channel()
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            verdict = carries_info(ch, "M", sequent(LANGUAGE_Y, "|- a"), "D", sequent(LANGUAGE_Z, "|- p"))
        assert verdict
        assert verdict.projection_warnings == ()
        assert verdict.via.defeating_state is None

    def test_loose_projection_warns(self):
        ch = binary_channel(iso_projections=False)
        with pytest.warns(UserWarning):
            verdict = carries_info(ch, "M", sequent(LANGUAGE_Y, "|- a"), "D", sequent(LANGUAGE_Z, "|- p"))
        assert verdict.carries
        assert verdict.projection_warnings == ("D",)

    def test_defeated_flow(self):
        ch = binary_channel()
        verdict = carries_info(ch, "M", sequent(LANGUAGE_Y, "|- a"), "M", sequent(LANGUAGE_Y, "|- b"))
        assert not verdict
        assert str(verdict.via.defeating_state) == "{a, p}"

    def test_unknown_node(self):
        with pytest.raises(IndexMismatchError):
            carries_info(binary_channel(), "Q", sequent(LANGUAGE_Y, "|- a"), "D", sequent(LANGUAGE_Z, "|- p"))


class TestIntroElim:
    def test_f_intro(self):
        assert str(f_intro(infomorphism_f(), sequent(LANGUAGE_Y, "a |- b"))) == "p |- p"
        assert f_intro(sigma(), sequent(LANGUAGE_Y, "|- a")) == sequent(LANGUAGE_Z, "|- p")

    def test_f_elim_candidates(self):
        candidates = f_elim_candidates(sigma(), sequent(LANGUAGE_Z, "|- p"))
        assert {str(q) for q in candidates} == {"|- a", "|- b", "|- a b"}

    def test_binary_flow(self):
        n = classification_n()
        result = binary_flow(infomorphism_f(), Infomorphism.identity(n), sequent(LANGUAGE_Y, "|- a"))
        assert result == frozenset({sequent(LANGUAGE_Z, "|- p")})

    def test_binary_flow_needs_shared_core(self):
        with pytest.raises(StructureMismatchError):
            binary_flow(infomorphism_f(), Infomorphism.identity(classification_m()), sequent(LANGUAGE_Y, "|- a"))
