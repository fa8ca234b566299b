"""Minimum and maximum index values over two distinct tree families.

The two supported readings of "extremal over a degree tuple" are kept
explicit and never mixed:

* ``arrangements``  — the tuple lists caterpillar spine degrees; the search
  ranges over orderings of the spine (quotiented by reversal).
* ``realizations``  — the tuple is a full tree degree sequence; the search
  ranges over isomorphism classes of realizations.

Both searches are exhaustive within their caps and reduce with
(min, max, lexicographically-least witness), so results are deterministic
however the work is split.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Union

from .caterpillar import BackboneArrangement, closed_form_irr
from .errors import CapExceeded, NoValidArrangement, NotRealizable, TooLarge
from .treegen import (
    HARD_CAP,
    canonical_form,
    enumerate_unlabeled_trees,
    greedy_tree,
    next_permutation,
)
from .trees import DegreeSequence, Tree, albertson_index, is_tree_realizable

__all__ = [
    "Interpretation",
    "ExtremalResult",
    "GreedyComparison",
    "extremal_over_arrangements",
    "extremal_over_realizations",
    "min_adjacency_arrangement",
    "compare_greedy_to_bruteforce",
    "realization_cap",
    "ARRANGEMENT_CAP",
]

ARRANGEMENT_CAP = 9
_DEFAULT_REALIZATION_CAP = 10
_ENV_CAP = "IRRFORGE_MAX_N"


class Interpretation(str, Enum):
    """Which family a degree tuple denotes in an extremal search."""

    CATERPILLAR_ARRANGEMENTS = "arrangements"
    FULL_REALIZATIONS = "realizations"


def realization_cap() -> int:
    """Vertex cap for realization brute force; env-tunable, hard max 12."""
    raw = os.environ.get(_ENV_CAP)
    if raw is None:
        return _DEFAULT_REALIZATION_CAP
    try:
        return min(int(raw), HARD_CAP)
    except ValueError:
        return _DEFAULT_REALIZATION_CAP


Witness = Union[BackboneArrangement, Tree]


@dataclass(frozen=True)
class ExtremalResult:
    interpretation: Interpretation
    min_value: int
    max_value: int
    argmin: Witness
    argmax: Witness
    instances_examined: int


def _valid_arrangement(p: Sequence[int]) -> bool:
    return p[0] >= 1 and p[-1] >= 1 and all(b >= 2 for b in p[1:-1])


def extremal_over_arrangements(spine_multiset: Sequence[int]) -> ExtremalResult:
    """Exact min/max of the closed form over arrangements modulo reversal.

    The multiset must allow at least one valid arrangement: length >= 2
    and at most two entries equal to 1 (the ends).  Witnesses are the
    lexicographically-least arrangements attaining each value.
    """
    ms = sorted(spine_multiset)
    k = len(ms)
    if k < 2:
        raise NoValidArrangement(f"need at least two spine entries, got {ms}")
    if k > ARRANGEMENT_CAP:
        raise CapExceeded(f"spine length {k} exceeds the arrangement cap {ARRANGEMENT_CAP}")
    if any(b < 1 for b in ms):
        raise NoValidArrangement(f"spine entries must be >= 1: {ms}")
    if sum(1 for b in ms if b == 1) > 2:
        raise NoValidArrangement(f"more than two entries equal to 1: {ms}")
    perm = list(ms)
    best_val = worst_val = None
    best_arr = worst_arr = None
    examined = 0
    while True:
        p = tuple(perm)
        if _valid_arrangement(p) and p <= p[::-1]:
            examined += 1
            v = closed_form_irr(BackboneArrangement(p))
            if best_val is None or v < best_val or (v == best_val and p < best_arr):
                best_val, best_arr = v, p
            if worst_val is None or v > worst_val or (v == worst_val and p < worst_arr):
                worst_val, worst_arr = v, p
        if not next_permutation(perm):
            break
    if best_val is None:
        raise NoValidArrangement(f"no valid arrangement of {ms}")
    return ExtremalResult(
        interpretation=Interpretation.CATERPILLAR_ARRANGEMENTS,
        min_value=best_val,
        max_value=worst_val,
        argmin=BackboneArrangement(best_arr),
        argmax=BackboneArrangement(worst_arr),
        instances_examined=examined,
    )


def extremal_over_realizations(d: DegreeSequence, cap: int | None = None) -> ExtremalResult:
    """Exact min/max of the edge-difference index over isomorphism classes.

    Witnesses are the representatives with the least canonical code among
    those attaining each value.
    """
    if not is_tree_realizable(d):
        raise NotRealizable(f"{d.degrees} is not a tree degree sequence")
    effective = realization_cap() if cap is None else min(cap, HARD_CAP)
    if d.n > effective:
        raise TooLarge(f"n={d.n} exceeds the realization cap {effective}")
    best = worst = None  # (value, canonical code, tree)
    examined = 0
    for t in enumerate_unlabeled_trees(d):
        examined += 1
        key = (albertson_index(t), canonical_form(t).code)
        if best is None or key < best[0:2]:
            best = (key[0], key[1], t)
        if worst is None or key[0] > worst[0] or (key[0] == worst[0] and key[1] < worst[1]):
            worst = (key[0], key[1], t)
    return ExtremalResult(
        interpretation=Interpretation.FULL_REALIZATIONS,
        min_value=best[0],
        max_value=worst[0],
        argmin=best[2],
        argmax=worst[2],
        instances_examined=examined,
    )


def min_adjacency_arrangement(spine_multiset: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Sorted order minimizes the adjacent-difference sum, at max - min.

    Along any ordering the partial sums from the position of the minimum
    to the position of the maximum telescope to at least max - min, and
    sorting attains that exactly.
    """
    ms = tuple(sorted(spine_multiset))
    if not ms:
        raise NoValidArrangement("empty multiset")
    return ms, ms[-1] - ms[0]


@dataclass(frozen=True)
class GreedyComparison:
    greedy_value: int
    brute_min: int
    equal: bool


def compare_greedy_to_bruteforce(d: DegreeSequence, cap: int | None = None) -> GreedyComparison:
    """Greedy-tree value next to the brute-force minimum; emitted, not asserted."""
    g = albertson_index(greedy_tree(d))
    brute = extremal_over_realizations(d, cap=cap).min_value
    return GreedyComparison(greedy_value=g, brute_min=brute, equal=g == brute)
