"""
Canonical fixtures.

Y = {a, b}, Z = {p}, σ : Y → Z sending both types to p;
M over Y with rows x1 ↦ {a}, x2 ↦ {a, b};
N over Z with the single row u ↦ {p};
f = (σ, u ↦ x2) : M ⇌ N.

The pushout system glues a theory over {a, b} and a theory over {b', c}
along a shared type m; the binary channel joins M and a two-instance copy
of N through a core on which both legs are iso-projections.
"""

from typing import Dict, Tuple

from ..data.classification import Classification, Infomorphism
from ..data.finset import FinSet, SetFn
from ..data.logic import LocalLogic
from ..data.sequent import Sequent, Theory
from ..data.system import Channel, DistributedSystem

LANGUAGE_Y = FinSet.of("a", "b")
LANGUAGE_Z = FinSet.of("p")


def sigma() -> SetFn:
    return SetFn.from_mapping(LANGUAGE_Y, LANGUAGE_Z, {"a": "p", "b": "p"})


def classification_m() -> Classification:
    return Classification.from_rows(("x1", "x2"), LANGUAGE_Y, {"x1": ["a"], "x2": ["a", "b"]})


def classification_n() -> Classification:
    return Classification.from_rows(("u",), LANGUAGE_Z, {"u": ["p"]})


def infomorphism_f() -> Infomorphism:
    return Infomorphism.from_mappings(classification_m(), classification_n(), {"a": "p", "b": "p"}, {"u": "x2"})


def sequent(language: FinSet, literal: str) -> Sequent:
    return Sequent.parse(language, literal)


def theory_t1() -> Theory:
    """{a ⊢ b ; b ⊢ } over Y."""
    return Theory.of(LANGUAGE_Y, sequent(LANGUAGE_Y, "a |- b"), sequent(LANGUAGE_Y, "b |-"))


# Pushout integration

PUSHOUT_LANGUAGES = {
    "t0": FinSet.of("m"),
    "t1": FinSet.of("a", "b"),
    "t2": FinSet.of("b'", "c"),
}


def pushout_system() -> DistributedSystem:
    c0 = Classification.from_rows(("y", "n"), PUSHOUT_LANGUAGES["t0"], {"y": ["m"]})
    c1 = Classification.from_rows(("i1", "i2"), PUSHOUT_LANGUAGES["t1"], {"i1": ["a", "b"], "i2": ["b"]})
    c2 = Classification.from_rows(("j1", "j2", "j3"), PUSHOUT_LANGUAGES["t2"], {"j1": ["b'", "c"], "j2": ["c"]})
    e1 = Infomorphism.from_mappings(c0, c1, {"m": "b"}, {"i1": "y", "i2": "y"})
    e2 = Infomorphism.from_mappings(c0, c2, {"m": "b'"}, {"j1": "y", "j2": "n", "j3": "n"})
    return DistributedSystem.build({"t0": c0, "t1": c1, "t2": c2},
                                   {"e1": ("t0", "t1", e1), "e2": ("t0", "t2", e2)})


def pushout_theories() -> Dict[str, Theory]:
    t1, t2 = PUSHOUT_LANGUAGES["t1"], PUSHOUT_LANGUAGES["t2"]
    return {
        "t0": Theory(PUSHOUT_LANGUAGES["t0"]),
        "t1": Theory.of(t1, sequent(t1, "|- b")),
        "t2": Theory.of(t2, sequent(t2, "b' |- c")),
    }


def pushout_logics() -> Dict[str, LocalLogic]:
    system = pushout_system()
    return {node: LocalLogic.over(system[node], t) for node, t in pushout_theories().items()}


# Binary channel

def binary_core() -> Classification:
    return Classification.from_rows(
        ("k1", "k2"), FinSet.of("a", "b", "p"), {"k1": ["a", "p"], "k2": ["a", "b", "p"]}
    )


def classification_n2() -> Classification:
    """N with a second instance, so the core reduct along p is isomorphic to it."""
    return Classification.from_rows(("u1", "u2"), LANGUAGE_Z, {"u1": ["p"], "u2": ["p"]})


def binary_channel(iso_projections: bool = True) -> Channel:
    """Discrete system {M, N'} covered by a core joining M's types with p.

    With ``iso_projections`` off, the right node is the one-instance N, whose
    leg is not an iso-projection.
    """
    core = binary_core()
    m = classification_m()
    left = Infomorphism.from_mappings(m, core, {"a": "a", "b": "b"}, {"k1": "x1", "k2": "x2"})
    if iso_projections:
        d = classification_n2()
        right = Infomorphism.from_mappings(d, core, {"p": "p"}, {"k1": "u1", "k2": "u2"})
    else:
        d = classification_n()
        right = Infomorphism.from_mappings(d, core, {"p": "p"}, {"k1": "u", "k2": "u"})
    system = DistributedSystem.build({"M": m, "D": d})
    return Channel(system, core, {"M": left, "D": right})


def canonical() -> Tuple[Classification, Classification, Infomorphism]:
    return classification_m(), classification_n(), infomorphism_f()
