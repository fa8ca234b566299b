"""Caterpillar construction from spine-degree arrangements and closed forms.

A backbone arrangement lists the intended degrees of the spine vertices in
path order.  Ends keep one slot for the spine edge, internal vertices keep
two, and every remaining slot becomes a pendant leaf.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidArrangement, NotSorted, WrongArity
from .trees import Tree, make_tree

__all__ = [
    "BackboneArrangement",
    "build_caterpillar",
    "closed_form_irr",
    "five_term_irr",
    "conditioned_star",
]


@dataclass(frozen=True)
class BackboneArrangement:
    """Spine degrees in path order.

    For two or more spine vertices the ends must be >= 1 and internal
    entries >= 2 (an internal vertex already spends two slots on the
    spine).  A single entry b >= 0 denotes a star with b leaves.
    """

    spine: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "spine", tuple(self.spine))
        s = self.spine
        if len(s) == 0:
            raise InvalidArrangement("empty spine")
        if len(s) == 1:
            if s[0] < 0:
                raise InvalidArrangement(f"star degree must be >= 0, got {s[0]}")
            return
        if s[0] < 1 or s[-1] < 1:
            raise InvalidArrangement(f"end entries must be >= 1: {s}")
        for b in s[1:-1]:
            if b < 2:
                raise InvalidArrangement(f"internal entry {b} < 2 in {s}")

    @property
    def k(self) -> int:
        return len(self.spine)

    def reversed(self) -> "BackboneArrangement":
        return BackboneArrangement(self.spine[::-1])


def build_caterpillar(b: BackboneArrangement) -> Tree:
    """Build the caterpillar whose spine vertex i has degree spine[i].

    Spine vertices are labeled 1..k in path order; pendant leaves follow,
    grouped by their spine vertex.
    """
    s = b.spine
    k = len(s)
    edges: list[tuple[int, int]] = []
    nxt = k + 1
    if k == 1:
        for _ in range(s[0]):
            edges.append((1, nxt))
            nxt += 1
        return make_tree(nxt - 1, edges)
    for i in range(1, k):
        edges.append((i, i + 1))
    for i in range(k):
        pend = s[i] - 1 if i in (0, k - 1) else s[i] - 2
        sv = i + 1
        for _ in range(pend):
            edges.append((sv, nxt))
            nxt += 1
    return make_tree(nxt - 1, edges)


def closed_form_irr(b: BackboneArrangement) -> int:
    """Edge-difference index of the caterpillar, from the spine alone.

    End corrections (b-1)^2, internal corrections (b-1)(b-2), plus the
    adjacent-difference sum along the spine.  Needs at least two spine
    vertices; the pure star has no second end to correct.
    """
    s = b.spine
    k = len(s)
    if k < 2:
        raise InvalidArrangement("closed form needs a spine of length >= 2")
    total = (s[0] - 1) ** 2 + (s[-1] - 1) ** 2
    for i in range(1, k - 1):
        total += (s[i] - 1) * (s[i] - 2)
    for i in range(k - 1):
        total += abs(s[i] - s[i + 1])
    return total


def five_term_irr(d: Sequence[int]) -> int:
    """Five-entry closed-form value for a sorted degree quintuple.

    Evaluates d1^2 + d5^2 + sum_{i=2..4} |d_i - d_{i+1}|
    + sum_{i=2..4} (d_i + 2)(d_i - 1) - 2, exactly as printed in the
    source text, including its adjacent-difference index range.  The
    entries must be non-decreasing.
    """
    d = tuple(d)
    if len(d) != 5:
        raise WrongArity(f"need exactly 5 entries, got {len(d)}")
    for i in range(4):
        if d[i] > d[i + 1]:
            raise NotSorted(f"entries must be non-decreasing: {d}")
    adj = sum(abs(d[i] - d[i + 1]) for i in range(1, 4))
    mid = sum((d[i] + 2) * (d[i] - 1) for i in range(1, 4))
    return d[0] ** 2 + d[4] ** 2 + adj + mid - 2


def conditioned_star(t: int) -> Tree:
    """Two-level star: center of degree t+1, each neighbor of degree t.

    The center has t+1 neighbors and every neighbor carries t-1 leaves,
    so the order is 1 + (t+1) + (t+1)(t-1).  For t = 1 the condition
    degenerates (the neighbors are leaves of degree 1 = t) and the result
    is the 3-vertex path; this is allowed on purpose.
    """
    if t < 1:
        raise InvalidArrangement(f"need t >= 1, got {t}")
    edges: list[tuple[int, int]] = []
    nxt = t + 3
    for mid in range(2, t + 3):
        edges.append((1, mid))
    for mid in range(2, t + 3):
        for _ in range(t - 1):
            edges.append((mid, nxt))
            nxt += 1
    return make_tree(nxt - 1, edges)
