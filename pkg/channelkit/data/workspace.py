"""
Workspace documents.

A workspace is one JSON object with the top-level keys languages,
classifications, infomorphisms, theories, logics, systems and channels.
Entities refer to each other by name; the loader resolves and validates
every reference, and the writer recovers names by value when serializing.
"""

import json
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterator, List, Mapping, Optional, Set, Union

from ..core.errors import (
    CapExceededError, ChannelKitError, DanglingReferenceError, InvalidInfomorphismError, WorkspaceParseError,
)
from .classification import Classification, Infomorphism
from .diagram import DiagramEdge
from .finset import FinSet
from .logic import LocalLogic
from .sequent import Sequent, Theory
from .system import Channel, DistributedSystem

SECTIONS = ("languages", "classifications", "infomorphisms", "theories", "logics", "systems", "channels")
_SINGULAR = {
    "languages": "language", "classifications": "classification", "infomorphisms": "infomorphism",
    "theories": "theory", "logics": "logic", "systems": "system", "channels": "channel",
}


@dataclass
class Workspace:
    """Named languages, classifications, infomorphisms, theories, logics, systems and channels."""

    languages: Dict[str, FinSet] = field(default_factory=dict)
    classifications: Dict[str, Classification] = field(default_factory=dict)
    infomorphisms: Dict[str, Infomorphism] = field(default_factory=dict)
    theories: Dict[str, Theory] = field(default_factory=dict)
    logics: Dict[str, LocalLogic] = field(default_factory=dict)
    systems: Dict[str, DistributedSystem] = field(default_factory=dict)
    channels: Dict[str, Channel] = field(default_factory=dict)
    natural_logics: Set[str] = field(default_factory=set)

    def counts(self) -> Dict[str, int]:
        return {section: len(getattr(self, section)) for section in SECTIONS}

    @property
    def is_empty(self) -> bool:
        return not any(self.counts().values())

    def lookup(self, section: str, name: str) -> Any:
        """Entity by name, or DanglingReferenceError naming the section."""
        entries = getattr(self, section)
        if name not in entries:
            raise DanglingReferenceError(f"no {_SINGULAR[section]} named {name!r}", section=section, name=name)
        return entries[name]


# Loading

def _fail(path: str, message: str) -> WorkspaceParseError:
    return WorkspaceParseError(f"{path}: {message}", entity=path)


def _object(value: Any, path: str) -> Mapping[str, Any]:
    if not isinstance(value, dict):
        raise _fail(path, "expected an object")
    return value


def _strings(value: Any, path: str) -> List[str]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise _fail(path, "expected a list of names")
    return list(value)


def _string(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise _fail(path, "expected a name")
    return value


def _mapping(value: Any, path: str) -> Dict[str, str]:
    entry = _object(value, path)
    for k, v in entry.items():
        _string(v, f"{path}.{k}")
    return dict(entry)


def _field(entry: Mapping[str, Any], key: str, path: str) -> Any:
    if key not in entry:
        raise _fail(path, f"missing field {key!r}")
    return entry[key]


def _ref(section: Mapping[str, Any], name: str, path: str, kind: str) -> Any:
    if name not in section:
        raise DanglingReferenceError(f"{path}: unknown {kind} {name!r}", entity=path, reference=name)
    return section[name]


@contextmanager
def _entity(path: str) -> Iterator[None]:
    """Prefix kernel validation errors with the entity being loaded."""
    try:
        yield
    except CapExceededError:
        raise
    except ChannelKitError as e:
        if "entity" not in e.details:
            e.details["entity"] = path
            e.message = f"{path}: {e.message}"
            e.args = (e.message,)
        raise


def _sequent(language: FinSet, value: Any, path: str) -> Sequent:
    entry = _object(value, path)
    gamma = _strings(entry.get("gamma", []), f"{path}.gamma")
    delta = _strings(entry.get("delta", []), f"{path}.delta")
    return Sequent(language, tuple(gamma), tuple(delta))


class WorkspaceLoader:
    """Build a validated Workspace from a JSON document."""

    @staticmethod
    def from_json(data: Any) -> Workspace:
        """Load from an already-parsed document; None stands for the empty document."""
        ws = Workspace()
        if data is None:
            return ws
        doc = _object(data, "document")
        unknown = [k for k in doc if k not in SECTIONS]
        if unknown:
            raise _fail(unknown[0], "unknown top-level section")
        sections = {k: _object(doc.get(k, {}), k) for k in SECTIONS}

        for name, value in sections["languages"].items():
            path = f"languages.{name}"
            with _entity(path):
                ws.languages[name] = FinSet(tuple(_strings(value, path)))

        for name, value in sections["classifications"].items():
            path = f"classifications.{name}"
            entry = _object(value, path)
            language = _ref(ws.languages, _string(_field(entry, "language", path), f"{path}.language"), path, "language")
            instances = _strings(_field(entry, "instances", path), f"{path}.instances")
            rows = {x: _strings(ys, f"{path}.incidence.{x}")
                    for x, ys in _object(entry.get("incidence", {}), f"{path}.incidence").items()}
            with _entity(path):
                ws.classifications[name] = Classification.from_rows(instances, language, rows)

        for name, value in sections["infomorphisms"].items():
            path = f"infomorphisms.{name}"
            entry = _object(value, path)
            source = _ref(ws.classifications, _string(_field(entry, "source", path), f"{path}.source"), path, "classification")
            target = _ref(ws.classifications, _string(_field(entry, "target", path), f"{path}.target"), path, "classification")
            types = _mapping(_field(entry, "types", path), f"{path}.types")
            instances = _mapping(_field(entry, "instances", path), f"{path}.instances")
            with _entity(path):
                f = Infomorphism.from_mappings(source, target, types, instances)
                bad = f.violation()
                if bad is not None:
                    raise InvalidInfomorphismError(
                        f"fundamental condition fails at instance {bad[0]!r}, type {bad[1]!r}",
                        instance=bad[0], type_=bad[1],
                    )
            ws.infomorphisms[name] = f

        for name, value in sections["theories"].items():
            path = f"theories.{name}"
            entry = _object(value, path)
            language = _ref(ws.languages, _string(_field(entry, "language", path), f"{path}.language"), path, "language")
            raw = entry.get("sequents", [])
            if not isinstance(raw, list):
                raise _fail(f"{path}.sequents", "expected a list of sequents")
            with _entity(path):
                ws.theories[name] = Theory(language, frozenset(
                    _sequent(language, q, f"{path}.sequents[{k}]") for k, q in enumerate(raw)
                ))

        for name, value in sections["logics"].items():
            path = f"logics.{name}"
            entry = _object(value, path)
            structure = _ref(ws.classifications, _string(_field(entry, "classification", path), f"{path}.classification"),
                             path, "classification")
            natural = entry.get("natural", False)
            if not isinstance(natural, bool):
                raise _fail(f"{path}.natural", "expected true or false")
            if natural == ("theory" in entry):
                raise _fail(path, "a logic names either a theory or \"natural\": true")
            with _entity(path):
                if natural:
                    from ..kernel.cls import intent
                    ws.logics[name] = LocalLogic.over(structure, intent(structure))
                    ws.natural_logics.add(name)
                else:
                    theory = _ref(ws.theories, _string(entry["theory"], f"{path}.theory"), path, "theory")
                    ws.logics[name] = LocalLogic.over(structure, theory)

        for name, value in sections["systems"].items():
            path = f"systems.{name}"
            entry = _object(value, path)
            nodes = {
                node: _ref(ws.classifications, _string(c, f"{path}.nodes.{node}"), path, "classification")
                for node, c in _object(_field(entry, "nodes", path), f"{path}.nodes").items()
            }
            edges = []
            for edge_name, edge_value in _object(entry.get("edges", {}), f"{path}.edges").items():
                edge_path = f"{path}.edges.{edge_name}"
                edge = _object(edge_value, edge_path)
                f = _ref(ws.infomorphisms, _string(_field(edge, "infomorphism", edge_path), f"{edge_path}.infomorphism"),
                         edge_path, "infomorphism")
                src = _string(_field(edge, "source", edge_path), f"{edge_path}.source")
                dst = _string(_field(edge, "target", edge_path), f"{edge_path}.target")
                for end in (src, dst):
                    _ref(nodes, end, edge_path, "node")
                edges.append(DiagramEdge(edge_name, src, dst, f))
            with _entity(path):
                ws.systems[name] = DistributedSystem(tuple(nodes.items()), tuple(edges))

        for name, value in sections["channels"].items():
            path = f"channels.{name}"
            entry = _object(value, path)
            system = _ref(ws.systems, _string(_field(entry, "system", path), f"{path}.system"), path, "system")
            core = _ref(ws.classifications, _string(_field(entry, "core", path), f"{path}.core"), path, "classification")
            legs = {
                node: _ref(ws.infomorphisms, _string(f, f"{path}.legs.{node}"), path, "infomorphism")
                for node, f in _object(_field(entry, "legs", path), f"{path}.legs").items()
            }
            with _entity(path):
                ws.channels[name] = Channel(system, core, legs)

        return ws

    @staticmethod
    def from_text(text: str) -> Workspace:
        """Parse a JSON document; syntax errors carry their line and column."""
        if not text.strip():
            return Workspace()
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise WorkspaceParseError(f"line {e.lineno}, column {e.colno}: {e.msg}", line=e.lineno, column=e.colno)
        except RecursionError:
            raise WorkspaceParseError("document is nested too deeply to parse")
        return WorkspaceLoader.from_json(data)

    @staticmethod
    def from_file(file_path: Union[str, Path]) -> Workspace:
        try:
            with open(file_path, "r", encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise WorkspaceParseError(f"cannot read workspace {file_path}: {e.strerror}", path=str(file_path))
        except UnicodeDecodeError as e:
            raise WorkspaceParseError(
                f"workspace {file_path} is not valid UTF-8 (byte {e.start})", path=str(file_path), byte=e.start
            )
        return WorkspaceLoader.from_text(text)


def load_workspace(path: Union[str, Path]) -> Workspace:
    return WorkspaceLoader.from_file(path)


# Writing

def _name_of(entries: Mapping[str, Any], value: Any) -> Optional[str]:
    for name, candidate in entries.items():
        if candidate == value:
            return name
    return None


class WorkspaceWriter:
    """Serialize a Workspace back to its document form.

    References are recovered by value; an object with no named counterpart
    (a core built by a command, say) is written under a derived name.
    """

    def __init__(self, ws: Workspace):
        self.ws = ws
        self.doc: Dict[str, Dict[str, Any]] = {section: {} for section in SECTIONS}
        self.known: Dict[str, Dict[str, Any]] = {
            section: dict(getattr(ws, section))
            for section in ("languages", "classifications", "infomorphisms", "theories", "systems")
        }

    def _named(self, section: str, value: Any, hint: str, write) -> str:
        name = _name_of(self.known[section], value)
        if name is None:
            name = hint
            self.known[section][name] = value
            write(name, value)
        return name

    def _language(self, language: FinSet, hint: str) -> str:
        return self._named("languages", language, f"{hint}.types", self._write_language)

    def _classification(self, c: Classification, hint: str) -> str:
        return self._named("classifications", c, hint, self._write_classification)

    def _infomorphism(self, f: Infomorphism, hint: str) -> str:
        return self._named("infomorphisms", f, hint, self._write_infomorphism)

    def _theory(self, t: Theory, hint: str) -> str:
        return self._named("theories", t, hint, self._write_theory)

    def _system(self, system: DistributedSystem, hint: str) -> str:
        return self._named("systems", system, hint, self._write_system)

    def _write_language(self, name: str, language: FinSet) -> None:
        self.doc["languages"][name] = list(language.elements)

    def _write_classification(self, name: str, c: Classification) -> None:
        self.doc["classifications"][name] = {
            "language": self._language(c.types, name),
            "instances": list(c.instances.elements),
            "incidence": {x: list(ys) for x, ys in c.rows().items() if ys},
        }

    def _write_infomorphism(self, name: str, f: Infomorphism) -> None:
        self.doc["infomorphisms"][name] = {
            "source": self._classification(f.source, f"{name}.source"),
            "target": self._classification(f.target, f"{name}.target"),
            "types": f.type_map.as_dict(),
            "instances": f.inst_map.as_dict(),
        }

    def _write_theory(self, name: str, t: Theory) -> None:
        self.doc["theories"][name] = {
            "language": self._language(t.language, name),
            "sequents": [q.to_dict() for q in t],
        }

    def _write_system(self, name: str, system: DistributedSystem) -> None:
        self.doc["systems"][name] = {
            "nodes": {node: self._classification(c, f"{name}.{node}") for node, c in system.items()},
            "edges": {
                e.name: {"source": e.src, "target": e.dst,
                         "infomorphism": self._infomorphism(e.arrow, f"{name}.{e.name}")}
                for e in system.edges
            },
        }

    def to_json(self) -> Dict[str, Any]:
        ws = self.ws
        writers = (
            ("languages", self._write_language),
            ("classifications", self._write_classification),
            ("infomorphisms", self._write_infomorphism),
            ("theories", self._write_theory),
        )
        for section, write in writers:
            for name, value in getattr(ws, section).items():
                write(name, value)
        for name, l in ws.logics.items():
            entry: Dict[str, Any] = {"classification": self._classification(l.structure, f"{name}.structure")}
            if name in ws.natural_logics:
                entry["natural"] = True
            else:
                entry["theory"] = self._theory(l.theory, f"{name}.theory")
            self.doc["logics"][name] = entry
        for name, system in ws.systems.items():
            self._write_system(name, system)
        for name, ch in ws.channels.items():
            self.doc["channels"][name] = {
                "system": self._system(ch.system, f"{name}.system"),
                "core": self._classification(ch.core, f"{name}.core"),
                "legs": {node: self._infomorphism(f, f"{name}.{node}") for node, f in ch.legs.items()},
            }
        return {section: entries for section, entries in self.doc.items() if entries}

    def to_text(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"

    def to_file(self, file_path: Union[str, Path]) -> None:
        with open(file_path, "w", encoding="utf-8") as f:
            f.write(self.to_text())


def dump_workspace(ws: Workspace) -> Dict[str, Any]:
    return WorkspaceWriter(ws).to_json()
