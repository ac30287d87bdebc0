"""
ChannelKit: runs workspace commands and packages their outcome as reports.
"""

import json
import time
import warnings
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence

from .config import ChannelKitConfig, use_config
from .errors import ChannelKitError, IndexMismatchError, LanguageMismatchError, UsageError
from ..data.diagram import Diagram, DiagramEdge
from ..data.logic import LocalLogic
from ..data.sequent import Sequent, Theory
from ..data.system import Channel
from ..data.workspace import Workspace, WorkspaceWriter
from ..environments.ifc import IFC
from ..environments.laws import EnvironmentProbe, check_environment_laws
from ..kernel import channel as channel_ops
from ..kernel import logic as logic_ops
from ..kernel import th
from ..utils.reporting import incidence_table, log, render_human


@dataclass
class Report:
    """Outcome of one command."""

    command: List[str]
    verdicts: Dict[str, Any] = field(default_factory=dict)
    witnesses: Dict[str, Any] = field(default_factory=dict)
    tables: Dict[str, str] = field(default_factory=dict)
    caps: Dict[str, int] = field(default_factory=dict)
    error: Optional[Dict[str, Any]] = None
    timing_ms: Optional[float] = None

    @property
    def ok(self) -> bool:
        return self.error is None

    def to_machine(self) -> Dict[str, Any]:
        """Structured form; no timing, so identical inputs give identical bytes."""
        payload: Dict[str, Any] = {"command": list(self.command)}
        if self.error is not None:
            payload["error"] = self.error
        else:
            payload["verdicts"] = self.verdicts
            payload["witnesses"] = self.witnesses
        payload["caps"] = self.caps
        return payload

    def render(self, output_format: str = "human") -> str:
        if output_format == "machine":
            return json.dumps(self.to_machine(), indent=2, ensure_ascii=False)
        payload = dict(self.to_machine())
        payload["tables"] = self.tables
        if self.timing_ms is not None:
            payload["timing_ms"] = self.timing_ms
        return render_human(payload)

    @classmethod
    def failed(cls, command: Sequence[str], error: ChannelKitError, caps: Mapping[str, int]) -> "Report":
        return cls(list(command), caps=dict(caps), error=error.to_dict())


def _sequents(t: Theory) -> List[str]:
    return [str(q) for q in t]


def _mapping(f) -> Dict[str, str]:
    return f.as_dict()


class ChannelKit:
    """
    Workspace command runner.

    Each cmd_* method evaluates one command under the configured caps and
    returns a Report; kernel errors propagate as ChannelKitError.
    """

    def __init__(self, workspace: Workspace, config: Optional[ChannelKitConfig] = None):
        """
        Args:
            workspace: Loaded and validated workspace
            config: Caps and output settings; defaults to ChannelKitConfig()
        """
        self.workspace = workspace
        self.config = config or ChannelKitConfig()
        self.derived = Workspace()

    def _run(self, command: Sequence[str], body: Callable[[Report], None]) -> Report:
        report = Report(list(command), caps=self.config.caps())
        start = time.perf_counter()
        with use_config(self.config):
            log(f"🚀 {' '.join(command)}")
            body(report)
        report.timing_ms = (time.perf_counter() - start) * 1000.0
        return report

    # Commands

    def cmd_validate(self) -> Report:
        """Entity counts plus the covering status of every channel."""
        ws = self.workspace

        def body(report: Report) -> None:
            report.verdicts["valid"] = True
            for name, ch in ws.channels.items():
                report.verdicts[f"covering.{name}"] = channel_ops.is_covering(ch)
            report.witnesses["counts"] = ws.counts()

        return self._run(["validate"], body)

    def cmd_entail(self, theory_name: str, literal: str) -> Report:
        """
        Decide whether a theory entails a sequent.

        Args:
            theory_name: Theory in the workspace
            literal: Sequent literal such as "a b |- c"

        Returns:
            Report with the verdict and, when false, a defeating state
        """
        t = self.workspace.lookup("theories", theory_name)

        def body(report: Report) -> None:
            q = Sequent.parse(t.language, literal)
            state = th.defeating_state(t, q)
            report.verdicts["entails"] = state is None
            report.witnesses["sequent"] = str(q)
            if state is not None:
                report.witnesses["defeating_state"] = str(state)

        return self._run(["entail", theory_name, literal], body)

    def cmd_closure(self, theory_name: str) -> Report:
        t = self.workspace.lookup("theories", theory_name)

        def body(report: Report) -> None:
            closed = th.closure(t)
            report.verdicts["size"] = len(closed)
            report.witnesses["closure"] = _sequents(closed)

        return self._run(["closure", theory_name], body)

    def cmd_colimit(self, system_name: str, assignments: Mapping[str, str]) -> Report:
        """Colimit of node theories along the system's type maps; unassigned nodes carry the empty theory."""
        system = self.workspace.lookup("systems", system_name)
        theories: Dict[str, Theory] = {}
        for node, theory_name in assignments.items():
            if node not in system:
                raise IndexMismatchError(f"system {system_name!r} has no node {node!r}", node=node)
            t = self.workspace.lookup("theories", theory_name)
            if t.language != system[node].types:
                raise LanguageMismatchError(
                    f"theory {theory_name!r} is not over the types of node {node!r}", node=node, theory=theory_name
                )
            theories[node] = t

        def body(report: Report) -> None:
            d = Diagram(
                tuple((node, theories.get(node, Theory(c.types))) for node, c in system.items()),
                tuple(DiagramEdge(e.name, e.src, e.dst, e.arrow.type_map) for e in system.edges),
            )
            colimit = th.th_colimit(d)
            report.verdicts["types"] = len(colimit.theory.language)
            report.witnesses["language"] = list(colimit.theory.language.elements)
            report.witnesses["theory"] = _sequents(colimit.theory)
            report.witnesses["legs"] = {node: _mapping(leg) for node, leg in colimit.cocone.legs.items()}

        command = ["colimit", system_name] + [f"{node}={name}" for node, name in assignments.items()]
        return self._run(command, body)

    def cmd_mincover(self, system_name: str) -> Report:
        """Minimal cover of a system; the core, legs and channel are kept in ``derived``."""
        system = self.workspace.lookup("systems", system_name)

        def body(report: Report) -> None:
            ch = channel_ops.minimal_cover(system)
            core_name = f"{system_name}.core"
            self.derived.classifications[core_name] = ch.core
            for node, leg in ch.legs.items():
                self.derived.infomorphisms[f"{system_name}.leg.{node}"] = leg
            self.derived.channels[f"{system_name}.min"] = ch
            report.verdicts["types"] = len(ch.core.types)
            report.verdicts["instances"] = len(ch.core.instances)
            report.verdicts["covering"] = channel_ops.is_covering(ch)
            report.witnesses["core"] = {
                "types": list(ch.core.types.elements),
                "instances": list(ch.core.instances.elements),
            }
            report.witnesses["legs"] = {
                node: {"types": _mapping(leg.type_map), "instances": _mapping(leg.inst_map)}
                for node, leg in ch.legs.items()
            }
            report.tables[core_name] = incidence_table(ch.core.rows(), ch.core.types)
            if self.config.out:
                self.write_derived(self.config.out)

        return self._run(["mincover", system_name], body)

    def _channel(self, name: str) -> Channel:
        """A named channel, or the minimal cover of a named system."""
        if name not in self.workspace.channels and name in self.workspace.systems:
            with use_config(self.config):
                return channel_ops.minimal_cover(self.workspace.systems[name])
        return self.workspace.lookup("channels", name)

    def _component_logics(self, ch: Channel, assignments: Sequence[str]) -> Dict[str, LocalLogic]:
        """Resolve node=logic pairs; a bare logic name goes to the one node over its structure."""
        logics: Dict[str, LocalLogic] = {}
        for item in assignments:
            node, sep, name = item.partition("=")
            if not sep:
                name = node
                l = self.workspace.lookup("logics", name)
                nodes = [k for k, c in ch.system.items() if c == l.structure]
                if len(nodes) != 1:
                    raise UsageError(
                        f"logic {name!r} fits {len(nodes)} nodes; write it as node={name}", logic=name
                    )
                node = nodes[0]
            else:
                l = self.workspace.lookup("logics", name)
            if node not in ch.system:
                raise IndexMismatchError(f"channel has no node {node!r}", node=node)
            if node in logics:
                raise UsageError(f"node {node!r} is given two logics", node=node)
            logics[node] = l
        for node, c in ch.system.items():
            logics.setdefault(node, LocalLogic.over(c, Theory(c.types)))
        return logics

    def cmd_fuse(self, channel_name: str, assignments: Sequence[str], probes: Sequence[str] = ()) -> Report:
        """Fuse component logics over a channel (or a system's minimal cover), optionally probing the result."""
        ch = self._channel(channel_name)
        logics = self._component_logics(ch, assignments)

        def body(report: Report) -> None:
            fused = channel_ops.fusion_logic(ch, logics)
            report.verdicts["covering"] = True
            report.verdicts["sound"] = logic_ops.is_sound(fused)
            for literal in probes:
                q = Sequent.parse(fused.language, literal)
                report.verdicts[f"entails {q}"] = th.entails(fused.theory, q)
            report.witnesses["theory"] = _sequents(fused.theory)

        command = ["fuse", channel_name] + list(assignments) + [f"--probe={p}" for p in probes]
        return self._run(command, body)

    def cmd_flow(self, channel_name: str, i: str, literal_i: str, j: str, literal_j: str) -> Report:
        ch = self._channel(channel_name)

        def body(report: Report) -> None:
            for node in (i, j):
                if node not in ch.system:
                    raise IndexMismatchError(f"channel has no node {node!r}", node=node)
            a_i = Sequent.parse(ch.system[i].types, literal_i)
            a_j = Sequent.parse(ch.system[j].types, literal_j)
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                verdict = channel_ops.carries_info(ch, i, a_i, j, a_j)
            report.verdicts["carries"] = verdict.carries
            report.witnesses["premise"] = str(verdict.via.premise)
            report.witnesses["conclusion"] = str(verdict.via.conclusion)
            if verdict.via.defeating_state is not None:
                report.witnesses["defeating_state"] = str(verdict.via.defeating_state)
            report.witnesses["projection_warnings"] = list(verdict.projection_warnings)

        return self._run(["flow", channel_name, i, literal_i, j, literal_j], body)

    def cmd_audit(self, logic_name: str) -> Report:
        """Soundness and completeness of a logic, with witnesses for each failure."""
        l = self.workspace.lookup("logics", logic_name)

        def body(report: Report) -> None:
            unsound = logic_ops.soundness_witness(l)
            missing = logic_ops.completeness_witness(l)
            report.verdicts["sound"] = unsound is None
            report.verdicts["complete"] = missing is None
            if unsound is not None:
                report.witnesses["unsound"] = {"sequent": str(unsound[0]), "instance": unsound[1]}
            if missing is not None:
                report.witnesses["not_entailed"] = str(missing)
            report.tables[logic_name] = incidence_table(l.structure.rows(), l.structure.types)

        return self._run(["audit", logic_name], body)

    def cmd_laws(self, exhaustive: bool = False) -> Report:
        """Environment laws with the workspace's own entities as the probe."""
        ws = self.workspace

        def body(report: Report) -> None:
            probe = EnvironmentProbe(
                structures=list(ws.classifications.values()),
                language_morphisms=[f.type_map for f in ws.infomorphisms.values()],
                structure_morphisms=list(ws.infomorphisms.values()),
                sentences=[q for t in ws.theories.values() for q in t],
                exhaustive=exhaustive,
            )
            outcome = check_environment_laws(IFC, probe)
            for result in outcome.results:
                report.verdicts[result.law] = result.passed
                if result.witness is not None:
                    report.witnesses[result.law] = result.witness
            report.witnesses["checked"] = {r.law: r.checked for r in outcome.results}

        return self._run(["laws"] + (["--exhaustive"] if exhaustive else []), body)

    # Derived objects

    def write_derived(self, path: str) -> None:
        """Write the workspace together with derived objects to ``path``."""
        ws, derived = self.workspace, self.derived
        merged = replace(
            ws,
            classifications={**ws.classifications, **derived.classifications},
            infomorphisms={**ws.infomorphisms, **derived.infomorphisms},
            channels={**ws.channels, **derived.channels},
        )
        WorkspaceWriter(merged).to_file(path)
