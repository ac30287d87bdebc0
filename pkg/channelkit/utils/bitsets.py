"""
Vectorized enumeration over subsets of a small language.

A subset of an n-element language is an int bitmask. A state description is
one such mask; a sequent is a pair (gamma, delta) of masks. Arrays of states
and sequent pairs are numpy int64 vectors so satisfaction over every state
(or every sequent) is a handful of bitwise array operations.
"""

from functools import lru_cache
from typing import Iterable, Tuple

import numpy as np

from ..core.config import get_config
from ..core.errors import CapExceededError


def require_types(n: int, cap_name: str = "max_types") -> None:
    """Raise unless an n-type language is within the named cap."""
    limit = getattr(get_config(), cap_name)
    if n > limit:
        flag = "--max-types" if cap_name == "max_types" else "--" + cap_name.replace("_", "-")
        raise CapExceededError(cap_name, limit, n, flag)


def popcount(values: np.ndarray) -> np.ndarray:
    values = np.asarray(values, dtype=np.int64)
    counts = np.zeros(values.shape, dtype=np.int64)
    v = values.copy()
    while np.any(v):
        counts += v & 1
        v >>= 1
    return counts


@lru_cache(maxsize=32)
def all_states(n: int) -> np.ndarray:
    """Every subset of an n-element language, in increasing mask order."""
    states = np.arange(1 << n, dtype=np.int64)
    states.setflags(write=False)
    return states


def row_satisfies(rows: np.ndarray, gamma: int, delta: int) -> np.ndarray:
    """Per row: gamma ⊆ row implies row ∩ delta ≠ ∅.

    Masks are int64, so callers stay within the type caps.
    """
    rows = np.asarray(rows, dtype=np.int64)
    return ((rows & gamma) != gamma) | ((rows & delta) != 0)


def model_states(n: int, pairs: Iterable[Tuple[int, int]]) -> np.ndarray:
    """States over an n-type language that satisfy every (gamma, delta) pair."""
    states = all_states(n)
    alive = np.ones(states.shape, dtype=bool)
    for gamma, delta in pairs:
        alive &= row_satisfies(states, gamma, delta)
    return states[alive]


@lru_cache(maxsize=16)
def sequent_pairs(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """All 4^n (gamma, delta) pairs, smallest sequents first.

    The order is (|gamma| + |delta|, gamma, delta), which makes the first hit
    of any search a minimal witness.
    """
    states = all_states(n)
    gammas = np.repeat(states, 1 << n)
    deltas = np.tile(states, 1 << n)
    size = popcount(gammas) + popcount(deltas)
    order = np.lexsort((deltas, gammas, size))
    gammas, deltas = gammas[order], deltas[order]
    gammas.setflags(write=False)
    deltas.setflags(write=False)
    return gammas, deltas


def satisfied_pairs(rows: Iterable[int], gammas: np.ndarray, deltas: np.ndarray) -> np.ndarray:
    """Mask over the given pairs: satisfied by every row (the intent when rows are a structure's)."""
    ok = np.ones(gammas.shape, dtype=bool)
    for row in rows:
        row = int(row)
        ok &= ((gammas & row) != gammas) | ((deltas & row) != 0)
    return ok


def image_table(image_bits: Iterable[int]) -> np.ndarray:
    """Image mask of every source subset, given the target bit of each source element."""
    bits = list(image_bits)
    table = np.zeros(1 << len(bits), dtype=np.int64)
    for i, bit in enumerate(bits):
        half = 1 << i
        table[half:2 * half] = table[:half] | bit
    return table
