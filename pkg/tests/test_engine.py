"""
Tests for the ChannelKit command runner.
"""

import json
from pathlib import Path

import pytest

from channelkit import (
    CapExceededError, ChannelKit, ChannelKitConfig, IndexMismatchError, LanguageMismatchError,
    NotCoveringError, Report, UsageError, load_workspace,
)

DATA_DIR = Path(__file__).parent / "data"
WORKSPACE = DATA_DIR / "workspace.json"


def create_kit(**overrides):
    return ChannelKit(load_workspace(WORKSPACE), ChannelKitConfig().merged(overrides))


class TestValidate:
    def test_counts_and_covering(self):
        report = create_kit().cmd_validate()
        assert report.verdicts["valid"]
        assert report.verdicts["covering.binary"]
        assert report.verdicts["covering.binary_loose"]
        assert not report.verdicts["covering.swapped"]
        assert report.witnesses["counts"]["channels"] == 3


class TestTheoryCommands:
    """Test entail, closure and colimit."""

    def test_entail(self):
        report = create_kit().cmd_entail("T1", "a |-")
        assert report.verdicts["entails"]
        assert "defeating_state" not in report.witnesses

    def test_entail_defeated(self):
        report = create_kit().cmd_entail("EMPTY", "|-")
        assert not report.verdicts["entails"]
        assert report.witnesses["defeating_state"] == "{}"

    def test_closure(self):
        report = create_kit().cmd_closure("EMPTY")
        assert report.verdicts["size"] == 7
        assert "a |- a" in report.witnesses["closure"]

    def test_colimit(self):
        report = create_kit().cmd_colimit("pushout", {"t1": "P1", "t2": "P2"})
        assert report.verdicts["types"] == 3
        assert report.witnesses["theory"] == ["|- m@t0", "m@t0 |- c@t2"]
        assert report.witnesses["legs"]["t1"] == {"a": "a@t1", "b": "m@t0"}
        assert report.command == ["colimit", "pushout", "t1=P1", "t2=P2"]

    def test_colimit_language_mismatch(self):
        with pytest.raises(LanguageMismatchError):
            create_kit().cmd_colimit("pushout", {"t0": "P1"})

    def test_colimit_unknown_node(self):
        with pytest.raises(IndexMismatchError):
            create_kit().cmd_colimit("pushout", {"t9": "P1"})


class TestMinCover:
    """Test minimal covers and derived output."""

    def test_discrete_cover(self):
        kit = create_kit()
        report = kit.cmd_mincover("discrete")
        assert report.verdicts == {"types": 3, "instances": 2, "covering": True}
        assert report.witnesses["core"]["instances"] == ["(x1,u)", "(x2,u)"]
        assert "discrete.core" in kit.derived.classifications
        assert "discrete.core" in report.tables

    def test_single_node_cover(self):
        report = create_kit().cmd_mincover("single")
        assert report.witnesses["core"]["instances"] == ["x1", "x2"]

    def test_product_cap(self):
        with pytest.raises(CapExceededError):
            create_kit(max_product=1).cmd_mincover("discrete")

    def test_derived_objects_written(self, tmp_path):
        out = tmp_path / "derived.json"
        create_kit(out=str(out)).cmd_mincover("discrete")
        ws = load_workspace(out)
        assert "discrete.core" in ws.classifications
        assert "discrete.min" in ws.channels
        assert ws.channels["discrete.min"].system == ws.systems["discrete"]


class TestFuse:
    """Test fusion over channels and minimal covers."""

    def test_pushout_fusion_over_system(self):
        report = create_kit().cmd_fuse("pushout", ["t0=L0", "t1=L1", "t2=L2"], ["|- c@t2"])
        assert report.verdicts == {"covering": True, "sound": True, "entails |- c@t2": True}
        assert report.witnesses["theory"] == ["|- m@t0", "m@t0 |- c@t2"]

    def test_bare_logic_name(self):
        report = create_kit().cmd_fuse("binary", ["aM"])
        assert report.witnesses["theory"] == ["|- a"]
        assert report.verdicts["sound"]

    def test_bare_logic_must_fit_one_node(self):
        with pytest.raises(UsageError):
            create_kit().cmd_fuse("binary", ["L0"])

    def test_node_given_twice(self):
        with pytest.raises(UsageError):
            create_kit().cmd_fuse("binary", ["M=aM", "M=bM"])

    def test_not_covering(self):
        with pytest.raises(NotCoveringError) as info:
            create_kit().cmd_fuse("swapped", [])
        assert info.value.edge == "s"


class TestFlow:
    """Test flow queries."""

    def test_carries(self):
        report = create_kit().cmd_flow("binary", "M", "|- a", "D", "|- p")
        assert report.verdicts["carries"]
        assert report.witnesses["projection_warnings"] == []

    def test_loose_channel_reports_warning(self):
        report = create_kit().cmd_flow("binary_loose", "M", "|- a", "D", "|- p")
        assert report.verdicts["carries"]
        assert report.witnesses["projection_warnings"] == ["D"]

    def test_defeated(self):
        report = create_kit().cmd_flow("binary", "M", "|- a", "M", "|- b")
        assert not report.verdicts["carries"]
        assert report.witnesses["defeating_state"] == "{a, p}"

    def test_flow_over_system_uses_minimal_cover(self):
        report = create_kit().cmd_flow("discrete", "M", "|- a", "N", "|- p")
        assert report.verdicts["carries"]
        assert report.witnesses["premise"] == "|- a@M"

    def test_unknown_node(self):
        with pytest.raises(IndexMismatchError):
            create_kit().cmd_flow("binary", "Q", "|- a", "D", "|- p")


class TestAuditAndLaws:
    def test_audit_incomplete(self):
        report = create_kit().cmd_audit("emptyM")
        assert report.verdicts == {"sound": True, "complete": False}
        assert report.witnesses["not_entailed"] == "|- a"

    def test_audit_unsound(self):
        report = create_kit().cmd_audit("bM")
        assert not report.verdicts["sound"]
        assert report.witnesses["unsound"] == {"sequent": "|- b", "instance": "x1"}

    def test_audit_natural(self):
        assert create_kit().cmd_audit("natM").verdicts == {"sound": True, "complete": True}

    def test_laws_hold_on_workspace(self):
        report = create_kit().cmd_laws()
        assert all(report.verdicts.values())
        assert report.witnesses["checked"]["satisfaction_invariance"] > 0

    def test_exhaustive_laws(self):
        report = create_kit().cmd_laws(exhaustive=True)
        assert all(report.verdicts.values())
        assert report.command == ["laws", "--exhaustive"]


class TestReport:
    """Test report rendering."""

    def test_machine_form_has_no_timing(self):
        report = create_kit().cmd_entail("T1", "a |-")
        payload = json.loads(report.render("machine"))
        assert "timing_ms" not in payload
        assert payload["caps"]["max_types"] == 16
        assert report.timing_ms is not None

    def test_human_form(self):
        text = create_kit().cmd_entail("T1", "a |-").render("human")
        assert "entail T1 a |-" in text
        assert "caps:" in text

    def test_failed_report(self):
        error = UsageError("bad input", flag="--x")
        report = Report.failed(["entail"], error, ChannelKitConfig().caps())
        assert not report.ok
        payload = report.to_machine()
        assert payload["error"] == {"kind": "usage", "message": "bad input", "details": {"flag": "--x"}}
        assert "verdicts" not in payload
