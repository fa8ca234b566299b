"""Enumeration and construction of trees realizing a degree sequence.

The labeled side runs through the Pruefer bijection: a vertex of degree d
appears d-1 times in the code, so the labeled realizations of a sequence
are exactly the distinct permutations of a fixed code multiset.  The
unlabeled side deduplicates by a canonical encoding rooted at the tree
center.  Enumeration is deterministic throughout: codes stream in
lexicographic order and class representatives sort by canonical code.
"""

from __future__ import annotations

import heapq
import math
import os
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import BadLabel, CapExceeded, NotRealizable
from .trees import DegreeSequence, Tree, is_tree_realizable, make_tree

__all__ = [
    "PruferCode",
    "CanonicalCode",
    "prufer_decode",
    "prufer_encode",
    "count_labeled_trees",
    "enumerate_labeled_trees",
    "canonical_form",
    "enumerate_unlabeled_trees",
    "all_unlabeled_trees",
    "greedy_tree",
    "random_tree",
    "next_permutation",
    "enumeration_cap",
    "HARD_CAP",
]

HARD_CAP = 12
_DEFAULT_CAP = 12
_ENV_CAP = "IRRFORGE_MAX_N"


def enumeration_cap() -> int:
    """Effective vertex-count cap for enumerations; env-tunable, hard max 12."""
    raw = os.environ.get(_ENV_CAP)
    if raw is None:
        return _DEFAULT_CAP
    try:
        return min(int(raw), HARD_CAP)
    except ValueError:
        return _DEFAULT_CAP


@dataclass(frozen=True)
class PruferCode:
    """A code of n-2 vertex labels; empty exactly when n == 2."""

    n: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.n < 2:
            raise BadLabel(f"codes exist only for n >= 2, got n={self.n}")
        if len(self.entries) != self.n - 2:
            raise BadLabel(
                f"code for n={self.n} needs {self.n - 2} entries, got {len(self.entries)}"
            )
        for e in self.entries:
            if not 1 <= e <= self.n:
                raise BadLabel(f"entry {e} outside 1..{self.n}")


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Isomorphism-invariant byte string; equal codes iff isomorphic trees."""

    code: bytes


def prufer_decode(p: PruferCode) -> Tree:
    """The unique labeled tree with the given code (smallest-leaf rule).

    Linear pointer scan: the smallest current leaf is either a vertex the
    pointer has not passed yet or the vertex just freed by the previous
    step.  Vertex n is never consumed, so the final edge joins it to the
    last remaining leaf.
    """
    n = p.n
    deg = [1] * (n + 1)
    for c in p.entries:
        deg[c] += 1
    edges: list[tuple[int, int]] = []
    ptr = 1
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for c in p.entries:
        edges.append((leaf, c))
        deg[c] -= 1
        if deg[c] == 1 and c < ptr:
            leaf = c
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n))
    return make_tree(n, edges)


def prufer_encode(t: Tree) -> PruferCode:
    """Inverse of decode: repeatedly strip the smallest leaf, record its neighbor."""
    n = t.n
    if n < 2:
        raise BadLabel("encoding needs n >= 2")
    adj = t.adjacency()
    deg = [0] + list(t.degrees)
    removed = [False] * (n + 1)
    entries: list[int] = []
    ptr = 1
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for _ in range(n - 2):
        nb = next(v for v in adj[leaf] if not removed[v])
        entries.append(nb)
        removed[leaf] = True
        deg[leaf] = 0
        deg[nb] -= 1
        if deg[nb] == 1 and nb < ptr:
            leaf = nb
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    return PruferCode(n=n, entries=tuple(entries))


def count_labeled_trees(d: DegreeSequence) -> int:
    """(n-2)! / prod (d_i - 1)! labeled trees where label i has degree d_i."""
    if not is_tree_realizable(d):
        raise NotRealizable(f"{d.degrees} is not a tree degree sequence")
    n = d.n
    if n <= 2:
        return 1
    denom = 1
    for deg in d.degrees:
        denom *= math.factorial(deg - 1)
    return math.factorial(n - 2) // denom


def next_permutation(a: list) -> bool:
    """Step a to its next lexicographic permutation in place; False at the last."""
    j = len(a) - 2
    while j >= 0 and a[j] >= a[j + 1]:
        j -= 1
    if j < 0:
        return False
    l = len(a) - 1
    while a[j] >= a[l]:
        l -= 1
    a[j], a[l] = a[l], a[j]
    a[j + 1 :] = reversed(a[j + 1 :])
    return True


def enumerate_labeled_trees(d: DegreeSequence) -> Iterator[Tree]:
    """Stream every labeled realization, code multiset in lexicographic order."""
    if not is_tree_realizable(d):
        raise NotRealizable(f"{d.degrees} is not a tree degree sequence")
    n = d.n
    cap = enumeration_cap()
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {cap}")
    if n == 1:
        yield make_tree(1, [])
        return
    code = []
    for label, deg in enumerate(d.degrees, start=1):
        code.extend([label] * (deg - 1))
    code.sort()
    while True:
        yield prufer_decode(PruferCode(n=n, entries=tuple(code)))
        if not next_permutation(code):
            break


def _find_centers(t: Tree) -> list[int]:
    """One or two middle vertices found by peeling leaves layer by layer."""
    n = t.n
    if n <= 2:
        return list(range(1, n + 1))
    adj = t.adjacency()
    deg = list(t.degrees)
    layer = [v for v in range(1, n + 1) if deg[v - 1] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v - 1] = 0
            for w in adj[v]:
                if deg[w - 1] > 0:
                    deg[w - 1] -= 1
                    if deg[w - 1] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(adj: list[list[int]], root: int, blocked: int) -> bytes:
    """Parenthesized encoding of the subtree at root, children codes sorted."""
    children = [w for w in adj[root] if w != blocked]
    if not children:
        return b"()"
    parts = sorted(_rooted_code(adj, w, root) for w in children)
    return b"(" + b"".join(parts) + b")"


def canonical_form(t: Tree) -> CanonicalCode:
    """Center-rooted canonical encoding; bicentral trees pair their halves."""
    adj = t.adjacency()
    centers = _find_centers(t)
    if len(centers) == 1:
        return CanonicalCode(_rooted_code(adj, centers[0], 0))
    c1, c2 = centers
    a = _rooted_code(adj, c1, c2)
    b = _rooted_code(adj, c2, c1)
    lo, hi = sorted((a, b))
    return CanonicalCode(b"[" + lo + hi + b"]")


def enumerate_unlabeled_trees(d: DegreeSequence) -> list[Tree]:
    """One representative per isomorphism class, ordered by canonical code."""
    reps: dict[bytes, Tree] = {}
    for t in enumerate_labeled_trees(d):
        code = canonical_form(t).code
        if code not in reps:
            reps[code] = t
    return [reps[c] for c in sorted(reps)]


@lru_cache(maxsize=None)
def _rooted_shapes(size: int) -> tuple[tuple, ...]:
    """All rooted trees on `size` vertices as canonical nested tuples."""
    if size == 1:
        return ((),)
    shapes: set[tuple] = set()
    for forest in _forests(size - 1, size - 1):
        shapes.add(forest)
    return tuple(sorted(shapes))


@lru_cache(maxsize=None)
def _forests(total: int, max_size: int) -> tuple[tuple, ...]:
    """Multisets of rooted shapes of given total size, as sorted tuples."""
    if total == 0:
        return ((),)
    out: set[tuple] = set()
    for first_size in range(min(total, max_size), 0, -1):
        for shape in _rooted_shapes(first_size):
            for rest in _forests(total - first_size, first_size):
                out.add(tuple(sorted((shape,) + rest)))
    return tuple(sorted(out))


def _shape_to_tree(shape: tuple) -> Tree:
    """Materialize a nested-tuple rooted shape as a labeled Tree (root = 1)."""
    edges: list[tuple[int, int]] = []
    counter = [1]

    def walk(node: tuple, label: int) -> None:
        for child in node:
            counter[0] += 1
            edges.append((label, counter[0]))
            walk(child, counter[0])

    walk(shape, 1)
    return make_tree(counter[0], edges)


def all_unlabeled_trees(n: int) -> list[Tree]:
    """Every free tree on n vertices, one per isomorphism class, code order.

    Generated from rooted shapes and deduplicated by the center-rooted
    canonical form; independent of the labeled enumeration route.
    """
    if n < 1:
        raise NotRealizable(f"no trees on {n} vertices")
    if n > HARD_CAP:
        raise CapExceeded(f"n={n} exceeds the hard cap {HARD_CAP}")
    if n == 1:
        return [make_tree(1, [])]
    reps: dict[bytes, Tree] = {}
    for shape in _rooted_shapes(n):
        t = _shape_to_tree(shape)
        code = canonical_form(t).code
        if code not in reps:
            reps[code] = t
    return [reps[c] for c in sorted(reps)]


def greedy_tree(d: DegreeSequence) -> Tree:
    """Breadth-first greedy realization: biggest degrees closest to the root.

    The root takes the largest degree.  Each step attaches the largest
    remaining degree to the frontier vertex with the largest degree,
    breaking ties by earliest creation.
    """
    if not is_tree_realizable(d):
        raise NotRealizable(f"{d.degrees} is not a tree degree sequence")
    n = d.n
    if n == 1:
        return make_tree(1, [])
    desc = sorted(d.degrees, reverse=True)
    edges: list[tuple[int, int]] = []
    # frontier entries: (-degree, creation_index, vertex, open_slots)
    root_deg = desc[0]
    frontier = [(-root_deg, 1, 1, root_deg)]
    next_label = 2
    pos = 1
    while pos < n:
        negdeg, created, vertex, slots = heapq.heappop(frontier)
        take = min(slots, n - pos)
        for _ in range(take):
            deg = desc[pos]
            pos += 1
            edges.append((vertex, next_label))
            if deg > 1:
                heapq.heappush(frontier, (-deg, next_label, next_label, deg - 1))
            next_label += 1
    return make_tree(n, edges)


def random_tree(d: DegreeSequence, seed: int) -> Tree:
    """Uniform labeled realization via a seeded shuffle of the code multiset."""
    if not is_tree_realizable(d):
        raise NotRealizable(f"{d.degrees} is not a tree degree sequence")
    n = d.n
    if n == 1:
        return make_tree(1, [])
    if n == 2:
        return make_tree(2, [(1, 2)])
    code = []
    for label, deg in enumerate(d.degrees, start=1):
        code.extend([label] * (deg - 1))
    rng = random.Random(seed)
    rng.shuffle(code)
    return prufer_decode(PruferCode(n=n, entries=tuple(code)))
