"""Systematic scans of instance families against the claims catalog.

A scan walks every instance of a family inside its size window, evaluates
the selected records, tallies verdict statuses, and keeps the minimal
counterexample per record under the total order

    (vertex count, degree sequence, canonical code),

where degree sequences compare lexicographically in their non-increasing
presentation, so instances with smaller maximum degree come first (the
path precedes the star).  Work may be split across workers; per-record
tallies merge by addition and minimal counterexamples by the total order,
so reports are byte-identical for any worker count.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

from .bounds import (
    HOLDS,
    NOT_APPLICABLE,
    UNDEFINED,
    VIOLATED,
    EngineOptions,
    Instance,
    Verdict,
    catalog_ids,
    evaluate_bound,
)
from .caterpillar import build_caterpillar
from .errors import CapExceeded, InputNotViolated, NoValidArrangement, TooLarge
from .extremal import (
    Interpretation,
    extremal_over_arrangements,
    extremal_over_realizations,
)
from .treegen import HARD_CAP, all_unlabeled_trees, canonical_form
from .trees import DegreeSequence, make_tree, tree_without_leaf

__all__ = [
    "Family",
    "SearchSpace",
    "Counterexample",
    "BoundTally",
    "ScanReport",
    "scan",
    "shrink",
]


class Family(str, Enum):
    ALL_TREES = "all-trees"
    CATERPILLARS = "caterpillars"
    REALIZABLE_SEQUENCES = "realizable-sequences"


_FAMILY_INTERPRETATION = {
    Family.CATERPILLARS: Interpretation.CATERPILLAR_ARRANGEMENTS,
    Family.REALIZABLE_SEQUENCES: Interpretation.FULL_REALIZATIONS,
}


@dataclass(frozen=True)
class SearchSpace:
    """What to scan: a family, a vertex-count window, and the mode.

    The extremal interpretation is fixed by the family (arrangement search
    for caterpillars, realization search for sequences); supplying a
    conflicting one raises, so interpretations are never silently mixed.
    """

    family: Family = Family.ALL_TREES
    n_min: int = 2
    n_max: int = 8
    max_degree: Optional[int] = None
    interpretation: Optional[Interpretation] = None
    mode: str = "literal"

    def __post_init__(self) -> None:
        if self.n_min < 1 or self.n_max < self.n_min:
            raise ValueError(f"bad range [{self.n_min}, {self.n_max}]")
        if self.n_max > HARD_CAP:
            raise CapExceeded(f"n_max={self.n_max} exceeds the hard cap {HARD_CAP}")
        expected = _FAMILY_INTERPRETATION.get(self.family)
        if self.interpretation is not None and self.interpretation != expected:
            raise ValueError(
                f"family {self.family.value} implies interpretation "
                f"{expected.value if expected else None}, got {self.interpretation.value}"
            )
        if self.family is Family.CATERPILLARS and self.n_max > 10:
            raise CapExceeded(
                "caterpillar scans need n_max <= 10 (spine length is capped at 9)"
            )
        if self.family is Family.REALIZABLE_SEQUENCES and self.n_max > 10:
            raise CapExceeded("sequence scans need n_max <= 10 (realization cap)")
        if self.mode not in ("literal", "proof"):
            raise ValueError(f"mode must be 'literal' or 'proof', got {self.mode!r}")


@dataclass(frozen=True)
class Counterexample:
    """A violating instance, with enough data to rebuild and re-verify it."""

    bound_id: str
    family: Family
    mode: str
    n: int
    m: int
    degrees: tuple[int, ...]
    edges: Optional[tuple[tuple[int, int], ...]]
    verdict: Verdict

    def rebuild_instance(self) -> Instance:
        return _instance_for(self.family, self.degrees, self.edges)

    def reverify(self, options: EngineOptions | None = None) -> Verdict:
        return evaluate_bound(self.bound_id, self.rebuild_instance(), self.mode, options)

    def summary(self) -> dict:
        out = {
            "bound": self.bound_id,
            "n": self.n,
            "m": self.m,
            "degrees": list(self.degrees),
        }
        if self.edges is not None:
            out["edges"] = [list(e) for e in self.edges]
        return out


def _instance_for(
    family: Family, degrees: Sequence[int], edges: Optional[Sequence[tuple[int, int]]]
) -> Instance:
    if family is Family.ALL_TREES:
        n = len(degrees)
        return Instance.from_tree(make_tree(n, list(edges)))
    if family is Family.REALIZABLE_SEQUENCES:
        seq = DegreeSequence(tuple(degrees))
        return Instance.from_degree_sequence(seq).with_extremal(
            extremal_over_realizations(seq)
        )
    inst = Instance.from_spine_multiset(tuple(degrees))
    return inst.with_extremal(extremal_over_arrangements(tuple(degrees)))


@dataclass
class BoundTally:
    holds: int = 0
    violated: int = 0
    not_applicable: int = 0
    undefined: int = 0
    minimal_counterexample: Optional[Counterexample] = None
    _minimal_key: Optional[tuple] = field(default=None, repr=False)

    def absorb_status(self, status: str) -> None:
        if status == HOLDS:
            self.holds += 1
        elif status == VIOLATED:
            self.violated += 1
        elif status == NOT_APPLICABLE:
            self.not_applicable += 1
        elif status == UNDEFINED:
            self.undefined += 1

    def offer_counterexample(self, key: tuple, ce: Counterexample) -> None:
        if self._minimal_key is None or key < self._minimal_key:
            self._minimal_key = key
            self.minimal_counterexample = ce

    def merge(self, other: "BoundTally") -> None:
        self.holds += other.holds
        self.violated += other.violated
        self.not_applicable += other.not_applicable
        self.undefined += other.undefined
        if other._minimal_key is not None:
            self.offer_counterexample(other._minimal_key, other.minimal_counterexample)


@dataclass(frozen=True)
class ScanReport:
    family: Family
    n_min: int
    n_max: int
    mode: str
    bound_ids: tuple[str, ...]
    tallies: dict  # bound_id -> BoundTally
    instances_examined: int

    def to_json(self) -> str:
        per_bound = {}
        for bid in self.bound_ids:
            t = self.tallies[bid]
            ce = t.minimal_counterexample
            per_bound[bid] = {
                "holds": t.holds,
                "violated": t.violated,
                "not_applicable": t.not_applicable,
                "undefined": t.undefined,
                "minimal_counterexample": ce.summary() if ce else None,
            }
        obj = {
            "family": self.family.value,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "mode": self.mode,
            "instances_examined": self.instances_examined,
            "bounds": per_bound,
        }
        return json.dumps(obj, indent=2)

    def to_markdown(self) -> str:
        lines = [
            f"## Scan: {self.family.value}, n in [{self.n_min}, {self.n_max}], {self.mode} mode",
            "",
            f"Instances examined: {self.instances_examined}",
            "",
            "| bound | holds | violated | n/a | undefined | minimal counterexample |",
            "|-------|-------|----------|-----|-----------|------------------------|",
        ]
        for bid in self.bound_ids:
            t = self.tallies[bid]
            ce = t.minimal_counterexample
            desc = "-"
            if ce is not None:
                desc = f"n={ce.n}, degrees {list(ce.degrees)}"
            lines.append(
                f"| {bid} | {t.holds} | {t.violated} | {t.not_applicable} "
                f"| {t.undefined} | {desc} |"
            )
        return "\n".join(lines) + "\n"


def _order_key(n: int, degrees: Sequence[int], code: bytes) -> tuple:
    return (n, tuple(sorted(degrees, reverse=True)), code)


def _tree_instances(space: SearchSpace) -> list[tuple[tuple, Instance]]:
    """(sort key, instance) pairs for every free tree in the window."""
    out = []
    for n in range(space.n_min, space.n_max + 1):
        for t in all_unlabeled_trees(n):
            if space.max_degree is not None and max(t.degrees) > space.max_degree:
                continue
            inst = Instance.from_tree(t)
            key = _order_key(n, inst.degree_sequence.degrees, canonical_form(t).code)
            out.append((key, inst))
    out.sort(key=lambda pair: pair[0])
    return out


def _sorted_tuples(total: int, parts: int, lo: int, hi: int):
    """Non-decreasing integer tuples of given length and sum, entries in [lo, hi]."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(lo, hi + 1):
        if first * parts > total:
            break
        for rest in _sorted_tuples(total - first, parts - 1, first, hi):
            yield (first,) + rest


def _sequence_instances(space: SearchSpace) -> list[tuple[tuple, Instance]]:
    out = []
    for n in range(space.n_min, space.n_max + 1):
        if n == 1:
            seqs: Iterable[tuple[int, ...]] = [(0,)]
        else:
            hi = space.max_degree if space.max_degree is not None else n - 1
            seqs = _sorted_tuples(2 * (n - 1), n, 1, hi)
        for degs in seqs:
            seq = DegreeSequence(degs)
            res = extremal_over_realizations(seq)
            inst = Instance.from_degree_sequence(seq).with_extremal(res)
            code = canonical_form(res.argmin).code
            out.append((_order_key(n, degs, code), inst))
    out.sort(key=lambda pair: pair[0])
    return out


def _spine_multisets(space: SearchSpace):
    """Sorted spine multisets whose caterpillar order falls in the window."""
    hi_deg = space.max_degree if space.max_degree is not None else space.n_max - 1
    for n_cat in range(max(space.n_min, 2), space.n_max + 1):
        for k in range(2, min(n_cat, 9) + 1):
            total = n_cat + k - 2  # spine degrees sum
            for ms in _sorted_tuples(total, k, 1, hi_deg):
                if sum(1 for b in ms if b == 1) > 2:
                    continue
                yield n_cat, ms


def _caterpillar_instances(space: SearchSpace) -> list[tuple[tuple, Instance]]:
    out = []
    for n_cat, ms in _spine_multisets(space):
        try:
            res = extremal_over_arrangements(ms)
        except NoValidArrangement:
            continue
        inst = Instance.from_spine_multiset(ms).with_extremal(res)
        code = canonical_form(build_caterpillar(res.argmin)).code
        out.append((_order_key(n_cat, ms, code), inst))
    out.sort(key=lambda pair: pair[0])
    return out


def _collect_instances(space: SearchSpace) -> list[tuple[tuple, Instance]]:
    if space.family is Family.ALL_TREES:
        return _tree_instances(space)
    if space.family is Family.REALIZABLE_SEQUENCES:
        return _sequence_instances(space)
    return _caterpillar_instances(space)


def _evaluate_chunk(
    chunk: list[tuple[tuple, Instance]],
    bound_ids: Sequence[str],
    space: SearchSpace,
    options: EngineOptions,
) -> dict:
    tallies = {bid: BoundTally() for bid in bound_ids}
    for key, inst in chunk:
        for bid in bound_ids:
            verdict = evaluate_bound(bid, inst, space.mode, options)
            tally = tallies[bid]
            tally.absorb_status(verdict.status)
            if verdict.status == VIOLATED:
                edges = inst.tree.edges if inst.tree is not None else None
                ce = Counterexample(
                    bound_id=bid,
                    family=space.family,
                    mode=space.mode,
                    n=inst.n,
                    m=inst.m,
                    degrees=inst.degree_sequence.degrees,
                    edges=edges,
                    verdict=verdict,
                )
                tally.offer_counterexample(key, ce)
    return tallies


def scan(
    space: SearchSpace,
    bounds: Optional[Sequence[str]] = None,
    workers: int = 1,
    options: EngineOptions | None = None,
) -> ScanReport:
    """Exhaustive scan of the space; deterministic for any worker count."""
    bound_ids = tuple(sorted(set(bounds))) if bounds else tuple(catalog_ids())
    known = set(catalog_ids())
    for bid in bound_ids:
        if bid not in known:
            raise KeyError(f"unknown bound id {bid!r}")
    opts = options or EngineOptions()
    pairs = _collect_instances(space)
    workers = max(1, workers)
    if workers == 1 or len(pairs) < 2:
        partials = [_evaluate_chunk(pairs, bound_ids, space, opts)]
    else:
        chunks = [pairs[i::workers] for i in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(
                pool.map(lambda c: _evaluate_chunk(c, bound_ids, space, opts), chunks)
            )
    tallies = {bid: BoundTally() for bid in bound_ids}
    for part in partials:
        for bid in bound_ids:
            tallies[bid].merge(part[bid])
    return ScanReport(
        family=space.family,
        n_min=space.n_min,
        n_max=space.n_max,
        mode=space.mode,
        bound_ids=bound_ids,
        tallies=tallies,
        instances_examined=len(pairs),
    )


# ---------------------------------------------------------------------------
# counterexample shrinking
# ---------------------------------------------------------------------------


def _leaf_removal_candidates(ce: Counterexample) -> list[tuple[tuple[int, ...], Optional[tuple]]]:
    """Smaller (degrees, edges) variants obtained by deleting one leaf."""
    out = []
    if ce.edges is not None:
        t = make_tree(ce.n, list(ce.edges))
        if t.n >= 2:
            for leaf in t.leaves():
                smaller = tree_without_leaf(t, leaf)
                out.append((smaller.degrees, smaller.edges))
        return out
    degs = list(ce.degrees)
    if ce.family is Family.REALIZABLE_SEQUENCES:
        if 1 in degs and len(degs) > 2:
            for e in sorted(set(d for d in degs if d >= 2)):
                smaller = sorted(degs)
                smaller.remove(1)
                smaller[smaller.index(e)] = e - 1
                out.append((tuple(sorted(smaller)), None))
        return out
    # caterpillar spine multisets: drop a pendant (decrement an entry) or a
    # spine end of degree one (remove a 1-entry)
    for e in sorted(set(d for d in degs if d >= 2)):
        smaller = sorted(degs)
        smaller[smaller.index(e)] = e - 1
        if sum(1 for b in smaller if b == 1) <= 2:
            out.append((tuple(sorted(smaller)), None))
    if 1 in degs and len(degs) > 2:
        smaller = sorted(degs)
        smaller.remove(1)
        out.append((tuple(smaller), None))
    return out


def shrink(ce: Counterexample, options: EngineOptions | None = None) -> Counterexample:
    """Greedy minimization by leaf removal while the verdict stays VIOLATED.

    Takes the first candidate (in deterministic order) that still violates,
    repeats until none does; idempotent at a local minimum.
    """
    if ce.verdict.status != VIOLATED:
        raise InputNotViolated(f"verdict is {ce.verdict.status}, not {VIOLATED}")
    current = ce
    while True:
        improved = None
        for degrees, edges in _leaf_removal_candidates(current):
            try:
                inst = _instance_for(current.family, degrees, edges)
            except (NoValidArrangement, TooLarge, CapExceeded):
                continue
            verdict = evaluate_bound(current.bound_id, inst, current.mode, options)
            if verdict.status == VIOLATED:
                improved = Counterexample(
                    bound_id=current.bound_id,
                    family=current.family,
                    mode=current.mode,
                    n=inst.n,
                    m=inst.m,
                    degrees=inst.degree_sequence.degrees,
                    edges=inst.tree.edges if inst.tree is not None else None,
                    verdict=verdict,
                )
                break
        if improved is None:
            return current
        current = improved
