"""Core tree and degree-sequence types plus the irregularity index functions.

Everything here is exact: index values are integers and derived statistics
are `fractions.Fraction`.  All types are immutable after construction and
every operation is a pure function, so values are safe to share across
concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .errors import BadIndex, CycleOrDisconnected

__all__ = [
    "Tree",
    "DegreeSequence",
    "DegreeStats",
    "make_tree",
    "albertson_index",
    "total_irregularity",
    "variance_form",
    "sigma_index",
    "degree_sequence_of",
    "is_tree_realizable",
    "parse_edge_list",
    "format_edge_list",
    "parse_degrees",
]


@dataclass(frozen=True)
class Tree:
    """A labeled tree on vertices 1..n with a validated edge list.

    `degrees` is derived during validation and cached; it does not take
    part in equality.  Construct through :func:`make_tree`.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...] = field(compare=False, repr=False)

    def degree(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise BadIndex(f"vertex {v} not in 1..{self.n}")
        return self.degrees[v - 1]

    def adjacency(self) -> list[list[int]]:
        """Adjacency lists indexed 0..n (slot 0 unused)."""
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def leaves(self) -> list[int]:
        return [v for v in range(1, self.n + 1) if self.degrees[v - 1] == 1]


def make_tree(n: int, edges: Iterable[tuple[int, int]]) -> Tree:
    """Validate and build a Tree; the edge set must span 1..n without cycles.

    Raises BadIndex for endpoints outside 1..n and CycleOrDisconnected when
    the edges do not form a spanning tree (wrong count, loop, duplicate,
    cycle, or disconnection).
    """
    if n < 1:
        raise BadIndex(f"vertex count must be >= 1, got {n}")
    edge_list = list(edges)
    if len(edge_list) != n - 1:
        raise CycleOrDisconnected(
            f"a tree on {n} vertices needs {n - 1} edges, got {len(edge_list)}"
        )
    parent = list(range(n + 1))
    deg = [0] * (n + 1)
    seen: set[tuple[int, int]] = set()
    for a, b in edge_list:
        if not (1 <= a <= n) or not (1 <= b <= n):
            raise BadIndex(f"edge ({a},{b}) leaves the range 1..{n}")
        if a == b:
            raise CycleOrDisconnected(f"self-loop at vertex {a}")
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise CycleOrDisconnected(f"duplicate edge {key}")
        seen.add(key)
        deg[a] += 1
        deg[b] += 1
        ra = a
        while parent[ra] != ra:
            parent[ra] = parent[parent[ra]]
            ra = parent[ra]
        rb = b
        while parent[rb] != rb:
            parent[rb] = parent[parent[rb]]
            rb = parent[rb]
        if ra == rb:
            raise CycleOrDisconnected(f"edge {key} closes a cycle")
        parent[ra] = rb
    # n-1 successful unions on n vertices force a single acyclic component.
    return Tree(n=n, edges=tuple(sorted(seen)), degrees=tuple(deg[1:]))


def albertson_index(t: Tree) -> int:
    """Sum over edges of |deg(u) - deg(v)|."""
    deg = t.degrees
    return sum(abs(deg[u - 1] - deg[v - 1]) for u, v in t.edges)


def total_irregularity(t: Tree) -> int:
    """Sum of |deg(u) - deg(v)| over all unordered vertex pairs."""
    ds = sorted(t.degrees)
    total = 0
    prefix = 0
    for i, d in enumerate(ds):
        total += d * i - prefix
        prefix += d
    return total


def variance_form(t: Tree) -> int:
    """n * sum(deg^2) - 4 m^2, i.e. n^2 times the degree variance."""
    m = len(t.edges)
    return t.n * sum(d * d for d in t.degrees) - 4 * m * m


def sigma_index(t: Tree) -> int:
    """Sum over edges of (deg(u) - deg(v))^2."""
    deg = t.degrees
    return sum((deg[u - 1] - deg[v - 1]) ** 2 for u, v in t.edges)


@dataclass(frozen=True)
class DegreeSequence:
    """A multiset of vertex degrees stored sorted non-decreasing.

    Entries must be positive; the single exception is the one-vertex
    sequence (0,), kept so that the trivial tree has a degree sequence.
    """

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        ds = tuple(sorted(self.degrees))
        object.__setattr__(self, "degrees", ds)
        if len(ds) == 0:
            raise ValueError("degree sequence must be nonempty")
        if ds != (0,) and ds[0] < 1:
            raise ValueError(f"degrees must be >= 1, got {ds}")

    @property
    def n(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)


@dataclass(frozen=True)
class DegreeStats:
    """Derived statistics of a degree sequence, all exact.

    `average` is the mean degree; `alpha` is the mean of the two smallest
    entries and `beta` the mean of the two largest (None when n == 1).
    `edge_count_if_tree` is n - 1.
    """

    max_degree: int
    min_degree: int
    average: Fraction
    alpha: Optional[Fraction]
    beta: Optional[Fraction]
    sum_sq: int
    sum_cube: int
    edge_count_if_tree: int

    @classmethod
    def of(cls, seq: DegreeSequence) -> "DegreeStats":
        ds = seq.degrees
        n = len(ds)
        alpha = Fraction(ds[0] + ds[1], 2) if n >= 2 else None
        beta = Fraction(ds[-2] + ds[-1], 2) if n >= 2 else None
        return cls(
            max_degree=ds[-1],
            min_degree=ds[0],
            average=Fraction(sum(ds), n),
            alpha=alpha,
            beta=beta,
            sum_sq=sum(d * d for d in ds),
            sum_cube=sum(d ** 3 for d in ds),
            edge_count_if_tree=n - 1,
        )


def degree_sequence_of(t: Tree) -> DegreeSequence:
    return DegreeSequence(t.degrees)


def is_tree_realizable(d: DegreeSequence) -> bool:
    """True when some tree has exactly these vertex degrees.

    For n >= 2 this is: all entries >= 1 and their sum is 2(n-1).  The
    one-vertex sequence is realizable only as (0,).
    """
    ds = d.degrees
    if len(ds) == 1:
        return ds[0] == 0
    return ds[0] >= 1 and sum(ds) == 2 * (len(ds) - 1)


def parse_edge_list(text: str) -> Tree:
    """Read the edge-list format: first line n, then n-1 lines "u v"."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CycleOrDisconnected("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise BadIndex(f"first line must be the vertex count, got {lines[0]!r}") from exc
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise BadIndex(f"expected 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise BadIndex(f"non-integer endpoint in {ln!r}") from exc
    return make_tree(n, edges)


def format_edge_list(t: Tree) -> str:
    out = [str(t.n)]
    out.extend(f"{u} {v}" for u, v in t.edges)
    return "\n".join(out) + "\n"


def parse_degrees(text: str) -> DegreeSequence:
    """Parse comma-separated degrees in any order; sorted on construction."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("empty degree list")
    try:
        values = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"degrees must be integers, got {text!r}") from exc
    return DegreeSequence(values)


def tree_without_leaf(t: Tree, leaf: int) -> Tree:
    """Remove a degree-1 vertex and relabel the rest densely to 1..n-1."""
    if t.degree(leaf) != 1:
        raise BadIndex(f"vertex {leaf} is not a leaf")
    edges = []
    for u, v in t.edges:
        if leaf in (u, v):
            continue
        uu = u - 1 if u > leaf else u
        vv = v - 1 if v > leaf else v
        edges.append((uu, vv))
    return make_tree(t.n - 1, edges)
