"""Catalog of the audited inequality claims and the verdict engine.

Each record transcribes one top-level claim from the source text under
study, keyed B01..B16, with its statement location and a short verbatim
anchor phrase.  Evaluation on a concrete instance produces a verdict:
HOLDS, VIOLATED, NOT_APPLICABLE (a stated condition or required symbol is
missing), or UNDEFINED (zero denominator or square root of a negative).

All comparisons are exact.  Sides containing a square root are compared
through sign analysis and squaring, never through floats.  The one
exception is B16, whose right side is a truncated trigonometric series
and is checked against a tolerance.

Two modes exist.  ``literal`` applies only the conditions written in the
statements themselves; ``proof`` additionally applies the assumptions made
inside the proofs, so its NOT_APPLICABLE set is a superset of literal's.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Optional

from .errors import NoValidArrangement, NotRealizable
from .exactval import Exact, NegativeRadicand, format_exact, pow2_exact, rational, sqrt_rational
from .extremal import ExtremalResult, Interpretation
from .trees import (
    DegreeSequence,
    DegreeStats,
    Tree,
    albertson_index,
    degree_sequence_of,
    is_tree_realizable,
)

__all__ = [
    "HOLDS",
    "VIOLATED",
    "NOT_APPLICABLE",
    "UNDEFINED",
    "Instance",
    "BoundRecord",
    "Verdict",
    "EngineOptions",
    "catalog",
    "catalog_ids",
    "lookup",
    "evaluate_bound",
    "evaluate_all",
    "series_rhs",
    "series_lhs",
    "verdict_to_json",
    "verdict_from_json",
    "verdict_csv_header",
    "verdict_csv_row",
]

HOLDS = "HOLDS"
VIOLATED = "VIOLATED"
NOT_APPLICABLE = "NOT_APPLICABLE"
UNDEFINED = "UNDEFINED"


@dataclass(frozen=True)
class Instance:
    """One concrete evaluation subject: a degree tuple plus derived data.

    ``n`` and ``m`` are the vertex and edge counts of the realized tree;
    for a spine multiset they are those of the caterpillar it builds, while
    the degree statistics always describe the tuple itself.  ``irr`` is
    set when a concrete tree is attached; ``irr_min``/``irr_max`` when an
    extremal search was run, tagged with its interpretation.
    """

    degree_sequence: DegreeSequence
    n: int
    m: int
    stats: DegreeStats
    tree: Optional[Tree] = None
    irr: Optional[int] = None
    irr_min: Optional[int] = None
    irr_max: Optional[int] = None
    interpretation: Optional[Interpretation] = None
    lambda_min: Optional[Fraction] = None
    lambda_max: Optional[Fraction] = None

    @classmethod
    def from_tree(cls, t: Tree) -> "Instance":
        seq = degree_sequence_of(t)
        return cls(
            degree_sequence=seq,
            n=t.n,
            m=len(t.edges),
            stats=DegreeStats.of(seq),
            tree=t,
            irr=albertson_index(t),
        )

    @classmethod
    def from_degree_sequence(cls, d: DegreeSequence) -> "Instance":
        if not is_tree_realizable(d):
            raise NotRealizable(f"{d.degrees} is not a tree degree sequence")
        return cls(
            degree_sequence=d,
            n=d.n,
            m=d.n - 1,
            stats=DegreeStats.of(d),
        )

    @classmethod
    def from_spine_multiset(cls, multiset) -> "Instance":
        ms = tuple(sorted(multiset))
        if len(ms) < 2:
            raise NoValidArrangement(f"need at least two spine entries, got {ms}")
        if any(b < 1 for b in ms) or sum(1 for b in ms if b == 1) > 2:
            raise NoValidArrangement(f"no valid arrangement of {ms}")
        seq = DegreeSequence(ms)
        n_cat = sum(ms) - len(ms) + 2
        return cls(
            degree_sequence=seq,
            n=n_cat,
            m=n_cat - 1,
            stats=DegreeStats.of(seq),
        )

    def with_extremal(self, result: ExtremalResult) -> "Instance":
        return replace(
            self,
            irr_min=result.min_value,
            irr_max=result.max_value,
            interpretation=result.interpretation,
        )

    def with_lambda_bounds(
        self, lambda_min: Optional[Fraction], lambda_max: Optional[Fraction]
    ) -> "Instance":
        return replace(self, lambda_min=lambda_min, lambda_max=lambda_max)

    def summary(self) -> dict:
        out: dict = {"n": self.n, "m": self.m, "degrees": list(self.degree_sequence.degrees)}
        if self.irr is not None:
            out["irr"] = self.irr
        if self.irr_min is not None:
            out["irr_min"] = self.irr_min
        if self.irr_max is not None:
            out["irr_max"] = self.irr_max
        if self.interpretation is not None:
            out["interpretation"] = self.interpretation.value
        return out


@dataclass(frozen=True)
class BoundRecord:
    """One cataloged claim: identifier, source anchors, and shape."""

    bound_id: str
    location: str
    quote: str
    relation: str  # "<", "<=", ">", ">=", "=", or "chain"
    target: str  # "irr", "irr_min", "irr_max", or "identity"
    statement: str
    applicability: str


@dataclass(frozen=True)
class Verdict:
    """Outcome of one record on one instance; pure in (record, instance, mode)."""

    bound_id: str
    status: str
    lhs: object = None  # Exact, float, or None
    rhs: object = None
    slack: object = None
    mode: str = "literal"
    params: tuple[tuple[str, str], ...] = ()
    note: str = ""


@dataclass(frozen=True)
class EngineOptions:
    """Evaluation knobs; defaults keep verdicts reproducible."""

    series_terms: int = 100_000
    series_tol: float = 1e-2
    include_discontinuities: bool = False
    discontinuity_margin: Fraction = Fraction(1, 20)


# ---------------------------------------------------------------------------
# series evaluator (the one float-based path)
# ---------------------------------------------------------------------------


def series_lhs(n) -> int:
    """floor(2n/3) + ceil((2n+1)/3), exact for any rational-representable n."""
    nf = Fraction(n)
    return math.floor(2 * nf / 3) + math.ceil((2 * nf + 1) / 3)


def series_rhs(n, terms: int) -> float:
    """Truncated evaluation of 5/6 + 2n/3 + floor(2n/3) + (1/pi) * sum.

    The summand is sin(2*pi*k*(2n+1)/3)/k.  The angle is reduced modulo one
    turn in exact rational arithmetic before calling sin, so precision does
    not degrade with k and shifted arguments reuse identical terms.
    """
    if terms < 1:
        raise ValueError(f"need at least one term, got {terms}")
    nf = Fraction(n)
    c = (2 * nf + 1) / 3
    p, q = c.numerator, c.denominator
    two_pi = 2.0 * math.pi
    total = 0.0
    for k in range(1, terms + 1):
        r = (k * p) % q
        total += math.sin(two_pi * (r / q)) / k
    return 5.0 / 6.0 + float(2 * nf / 3) + math.floor(2 * nf / 3) + total / math.pi


def _distance_to_series_discontinuity(n) -> Fraction:
    """Distance from n to the nearest jump of either floor(2n/3) or ceil((2n+1)/3)."""
    nf = Fraction(n)
    # floor(2n/3) jumps where n = 3j/2
    j = round(nf * 2 / 3)
    d_floor = abs(nf - Fraction(3 * j, 2))
    for jj in (j - 1, j + 1):
        d_floor = min(d_floor, abs(nf - Fraction(3 * jj, 2)))
    # ceil((2n+1)/3) jumps where n = (3j-1)/2
    j = round((2 * nf + 1) / 3)
    d_ceil = abs(nf - Fraction(3 * j - 1, 2))
    for jj in (j - 1, j + 1):
        d_ceil = min(d_ceil, abs(nf - Fraction(3 * jj - 1, 2)))
    return min(d_floor, d_ceil)


# ---------------------------------------------------------------------------
# per-record computations
# ---------------------------------------------------------------------------


def _deg(inst: Instance) -> tuple[int, ...]:
    return inst.degree_sequence.degrees


def _lambda_min(inst: Instance) -> Fraction:
    return inst.lambda_min if inst.lambda_min is not None else inst.stats.average


def _lambda_max(inst: Instance) -> Fraction:
    return inst.lambda_max if inst.lambda_max is not None else inst.stats.average


def _c_b01(inst, opts):
    rhs = sqrt_rational(Fraction(inst.m * inst.stats.sum_sq - 4 * inst.m * inst.m))
    return [rational(inst.irr), rhs], ["<="], ()


def _c_b02(inst, opts):
    t = inst.tree
    deg = t.degrees
    spread = inst.stats.max_degree - inst.stats.min_degree
    lhs = sum(spread * abs(deg[u - 1] - deg[v - 1]) for u, v in t.edges)
    return [rational(lhs), rational(spread * inst.irr)], ["="], ()


def _c_b03(inst, opts):
    d = inst.stats.max_degree
    mid = Fraction(2 * inst.irr_min, d * (d - 1) ** 2)
    return [rational(0), rational(mid), rational(1)], ["<", "<"], ()


def _c_b04(inst, opts):
    ds = _deg(inst)
    inner = inst.stats.sum_sq + 2 * ds[0] + ds[1] - 3 * ds[2] + 2 * (ds[-2] + ds[-1])
    lhs = rational(inst.irr_min - inner)
    return [lhs, rational(Fraction(inst.stats.max_degree, 4))], [">="], ()


def _c_b05(inst, opts):
    a, b = inst.stats.alpha, inst.stats.beta
    m = inst.m
    lhs = rational(b * m * (m + 1) / a + a * inst.irr_min)
    return [lhs, rational(inst.stats.sum_cube)], [">="], ()


def _c_b06(inst, opts):
    part = math.floor(Fraction(2 * inst.m, inst.n)) + math.ceil(Fraction(2 * inst.n, inst.m))
    rhs = pow2_exact(inst.stats.alpha) + part
    return [rational(inst.irr_max), rhs], [">"], ()


def _c_b07(inst, opts):
    part = math.ceil(Fraction(2 * inst.n, inst.m))
    rhs = pow2_exact(inst.stats.beta) + part
    return [rational(inst.irr_max), rhs], ["<"], ()


def _c_b08(inst, opts):
    ds = _deg(inst)
    rhs = 2 * sum(ds) - len(ds) * inst.stats.average
    return [rational(inst.n), rational(rhs)], ["="], ()


def _c_b09(inst, opts):
    diff = abs(inst.irr_min - inst.irr_max)
    return [rational(diff), rational(inst.stats.average)], ["<="], ()


def _c_b10(inst, opts):
    d = inst.stats.max_degree
    scale = Fraction(inst.irr_max, (d - 1) ** 4)
    lhs = sqrt_rational(Fraction(inst.m * (inst.n - 3) ** 2)) * scale
    return [lhs, rational(inst.stats.average)], ["<"], ()


def _c_b11(inst, opts):
    n, m = inst.n, inst.m
    lam = inst.stats.average
    left = sqrt_rational(Fraction(2 * n)) * Fraction(n, 2)
    coef = Fraction(n * n - 2 * m) * inst.stats.max_degree / (2 * m * lam)
    mid = sqrt_rational(Fraction(2 * m * n, 2 * m)) * coef
    return [left, mid, rational(inst.irr)], ["<", "<="], ()


def _c_b12(inst, opts):
    ds = _deg(inst)
    n, m = inst.n, inst.m
    st = inst.stats
    rhs = (
        Fraction(st.sum_sq - ds[0] ** 2)
        - ds[0]
        + 3 * m * n
        - 2 * math.floor(Fraction(3 * n * n - 1, 2))
        + Fraction(3, 4) * st.average * n
        - 5 * st.min_degree * st.max_degree
    )
    return [rational(inst.irr), rational(rhs)], [">="], ()


def _c_b13(inst, opts):
    n, m = inst.n, inst.m
    d = inst.stats.max_degree
    inner = m * (n + 1) - d * (n - d) + math.floor(Fraction(2 * (m - d) ** 3, n - 2))
    rhs = n * Fraction(inner) / inst.stats.average ** 3
    return [rational(inst.irr), rational(rhs)], [">="], ()


def _c_b14(inst, opts):
    n, m = inst.n, inst.m
    rhs = (
        Fraction(4 * m * m, n)
        + math.floor(Fraction(2 * n, 3))
        + math.ceil(Fraction(2 * n + 1, 3))
    )
    return [rational(inst.irr), rational(rhs)], [">="], ()


def _c_b15(inst, opts):
    n, m = inst.n, inst.m
    st = inst.stats
    lmin, lmax = _lambda_min(inst), _lambda_max(inst)
    low = Fraction(4 * m * m - 2 * m * (st.max_degree + lmin) * (n - 1)) / (3 * st.max_degree + n)
    high = (m * st.alpha ** 3 + lmax * (n - 1)) / (n + 4 * st.average * st.min_degree ** 2)
    params = (("lambda_min", str(lmin)), ("lambda_max", str(lmax)))
    return [rational(low), rational(inst.irr), rational(high)], ["<=", "<="], params


def _c_b15b(inst, opts):
    n = inst.n
    st = inst.stats
    rhs = st.alpha * math.floor(Fraction(2 * n, 3)) + st.beta * math.ceil(Fraction(2 * n + 1, 3))
    return [rational(inst.irr), rational(rhs)], ["<="], ()


# ---------------------------------------------------------------------------
# applicability predicates
# ---------------------------------------------------------------------------


def _strictly_increasing(ds: tuple[int, ...]) -> bool:
    return all(ds[i] < ds[i + 1] for i in range(len(ds) - 1))


def _p_b02_proof(inst):
    return inst.stats.max_degree != inst.stats.min_degree


def _p_b04_proof(inst):
    ds = _deg(inst)
    tail = ds[-2] + ds[-1]
    return 2 * tail > 2 * ds[0] + ds[1] - 3 * ds[2] and tail > inst.stats.max_degree


def _p_b05_literal(inst):
    return inst.stats.alpha.denominator == 1 and inst.stats.beta.denominator == 1


def _p_b05_proof(inst):
    return inst.irr_min < inst.m * (inst.m + 1)


def _p_b06_literal(inst):
    return _deg(inst)[-1] <= 20


def _p_b06_proof(inst):
    ds = _deg(inst)
    st = inst.stats
    return _strictly_increasing(ds) and st.beta > st.alpha > ds[0] and ds[0] >= 10


def _p_b07_literal(inst):
    return _deg(inst)[-1] > 3


def _p_b07_proof(inst):
    ds = _deg(inst)
    st = inst.stats
    return _strictly_increasing(ds) and st.beta > st.alpha > ds[0] and ds[0] > 3


def _p_b10_proof(inst):
    return inst.stats.average > 2


def _p_b11_proof(inst):
    ds = _deg(inst)
    return all(ds[i + 1] - ds[i] > ds[1] for i in range(1, len(ds) - 1))


def _p_b12_proof(inst):
    st = inst.stats
    return st.min_degree > 2 and st.average * inst.n > st.max_degree and inst.n >= 4


def _p_b13_proof(inst):
    return inst.stats.max_degree > 16 and inst.stats.min_degree > 4


def _p_b14_literal(inst):
    return inst.n >= 4


def _p_b15_proof(inst):
    st = inst.stats
    lmin, lmax = _lambda_min(inst), _lambda_max(inst)
    return st.min_degree >= 2 and 3 * st.min_degree < lmin <= lmax < st.max_degree


# ---------------------------------------------------------------------------
# the catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _BoundSpec:
    record: BoundRecord
    requires: tuple[str, ...]
    compute: Optional[Callable] = None
    literal_pred: Optional[Callable] = None
    proof_pred: Optional[Callable] = None


def _rec(bound_id, location, quote, relation, target, statement, applicability):
    return BoundRecord(bound_id, location, quote, relation, target, statement, applicability)


_SPECS: dict[str, _BoundSpec] = {}


def _register(spec: _BoundSpec) -> None:
    _SPECS[spec.record.bound_id] = spec


_register(_BoundSpec(
    record=_rec(
        "B01", "Section 2, inequality (2)", "Using variance, Mandal et al.",
        "<=", "irr",
        "irr <= sqrt(m*sum(d_i^2) - 4m^2)",
        "any instance with irr",
    ),
    requires=("irr",),
    compute=_c_b01,
))
_register(_BoundSpec(
    record=_rec(
        "B02", "Section 2, Theorem 2.1", "connected nonregular graph",
        "=", "irr",
        "sum_{uv in E} (Delta-delta)|d_u-d_v| = (Delta-delta)*irr",
        "any instance with a tree; proof mode: nonregular",
    ),
    requires=("tree", "irr"),
    compute=_c_b02,
    proof_pred=_p_b02_proof,
))
_register(_BoundSpec(
    record=_rec(
        "B03", "Section 3, Proposition 3.1", "yielding a value strictly between 0 and 1",
        "chain", "irr_min",
        "0 < 2*irr_min/(Delta*(Delta-1)^2) < 1",
        "any instance with irr_min",
    ),
    requires=("irr_min",),
    compute=_c_b03,
))
_register(_BoundSpec(
    record=_rec(
        "B04", "Section 3, Proposition 3.2", "sum of squared degrees",
        ">=", "irr_min",
        "irr_min - (sum(d_i^2) + 2d_1 + d_2 - 3d_3 + 2(d_{n-1}+d_n)) >= Delta/4",
        "needs at least three degrees; proof mode: 2(d_{n-1}+d_n) > 2d_1+d_2-3d_3 and d_{n-1}+d_n > Delta",
    ),
    requires=("irr_min", "d3"),
    compute=_c_b04,
    proof_pred=_p_b04_proof,
))
_register(_BoundSpec(
    record=_rec(
        "B05", "Section 3, Proposition 3.3", "and integers α and β",
        ">=", "irr_min",
        "beta*m*(m+1)/alpha + alpha*irr_min >= sum(d_i^3)",
        "alpha and beta integers (stated); proof mode: irr_min < m(m+1)",
    ),
    requires=("irr_min", "alpha", "beta"),
    compute=_c_b05,
    literal_pred=_p_b05_literal,
    proof_pred=_p_b05_proof,
))
_register(_BoundSpec(
    record=_rec(
        "B06", "Section 4, Proposition 4.1, first case", "upper bound of the maximum value",
        ">", "irr_max",
        "irr_max > floor(2m/n) + ceil(2n/m) + 2^alpha  when d_n <= 20",
        "statement case d_n <= 20; proof mode: strictly increasing degrees, beta > alpha > d_1 >= 10",
    ),
    requires=("irr_max", "alpha"),
    compute=_c_b06,
    literal_pred=_p_b06_literal,
    proof_pred=_p_b06_proof,
))
_register(_BoundSpec(
    record=_rec(
        "B07", "Section 4, Proposition 4.1, second case", "upper bound of the maximum value",
        "<", "irr_max",
        "irr_max < ceil(2n/m) + 2^beta  when d_n > 3",
        "statement case d_n > 3; proof mode: strictly increasing degrees, beta > alpha > d_1 > 3",
    ),
    requires=("irr_max", "beta"),
    compute=_c_b07,
    literal_pred=_p_b07_literal,
    proof_pred=_p_b07_proof,
))
_register(_BoundSpec(
    record=_rec(
        "B08", "Section 4, vertex-count identity", "the number of vertices and λ",
        "=", "identity",
        "n = sum(2*d_i - lambda)",
        "any instance",
    ),
    requires=(),
    compute=_c_b08,
))
_register(_BoundSpec(
    record=_rec(
        "B09", "Section 4, Proposition 4.2", "difference between irr_min and irr_max",
        "<=", "irr_min",
        "|irr_min - irr_max| <= lambda",
        "any instance with both extremal values; the difference operator is read as absolute difference",
    ),
    requires=("irr_min", "irr_max"),
    compute=_c_b09,
))
_register(_BoundSpec(
    record=_rec(
        "B10", "Section 4, Lemma 4.1", "We consider three terms",
        "<", "irr_max",
        "sqrt(m*(n-3)^2) * irr_max / (Delta-1)^4 < lambda",
        "any instance with irr_max; proof mode: lambda > 2",
    ),
    requires=("irr_max",),
    compute=_c_b10,
    proof_pred=_p_b10_proof,
))
_register(_BoundSpec(
    record=_rec(
        "B11", "Section 4, Lemma 4.2", "we consider φ ≈ 1.66",
        "chain", "irr",
        "2n*sqrt(2n)/4 < (n^2-2m)*Delta*sqrt(2mn)/(2m*lambda*sqrt(2m)) <= irr",
        "any instance with irr; proof mode: consecutive degree gaps above d_2",
    ),
    requires=("irr",),
    compute=_c_b11,
    proof_pred=_p_b11_proof,
))
_register(_BoundSpec(
    record=_rec(
        "B12", "Section 5, Theorem 5.1", "stars with sufficiently many vertices",
        ">=", "irr",
        "irr >= sum_{i>=2}(d_i^2) - d_1 + 3mn - 2*floor((3n^2-1)/2) + (3/4)*lambda*n - 5*delta*Delta",
        "any instance with irr; proof mode: delta > 2, lambda*n > Delta, n >= 4",
    ),
    requires=("irr",),
    compute=_c_b12,
    proof_pred=_p_b12_proof,
))
_register(_BoundSpec(
    record=_rec(
        "B13", "Section 5, Theorem 5.2", "satisfies Δ > 16",
        ">=", "irr",
        "irr >= n*(m(n+1) - Delta(n-Delta) + floor(2(m-Delta)^3/(n-2)))/lambda^3",
        "any instance with irr; proof mode: Delta > 16 and delta > 4",
    ),
    requires=("irr",),
    compute=_c_b13,
    proof_pred=_p_b13_proof,
))
_register(_BoundSpec(
    record=_rec(
        "B14", "Section 5, Corollary 5.1", "we present in Corollary",
        ">=", "irr",
        "irr >= 4m^2/n + floor(2n/3) + ceil((2n+1)/3)",
        "trees of order n >= 4 (the catalog scopes the corollary to its parent theorem's regime); proof mode: Delta > 16 and delta > 4",
    ),
    requires=("irr",),
    compute=_c_b14,
    literal_pred=_p_b14_literal,
    proof_pred=_p_b13_proof,
))
_register(_BoundSpec(
    record=_rec(
        "B15", "Section 5, Theorem 5.3", "maximum and minimum values of λ",
        "chain", "irr",
        "(4m^2 - 2m(Delta+lambda_min)(n-1))/(3Delta+n) <= irr <= (m*alpha^3 + lambda_max(n-1))/(n + 4*lambda*delta^2)",
        "any instance with irr; lambda_min/lambda_max default to lambda; proof mode: delta >= 2 and 3delta < lambda_min <= lambda_max < Delta",
    ),
    requires=("irr", "alpha"),
    compute=_c_b15,
    proof_pred=_p_b15_proof,
))
_register(_BoundSpec(
    record=_rec(
        "B15b", "Section 5, Theorem 5.4", "treat it as a function",
        "<=", "irr",
        "irr <= alpha*floor(2n/3) + beta*ceil((2n+1)/3)",
        "any instance with irr",
    ),
    requires=("irr", "alpha", "beta"),
    compute=_c_b15b,
))
_register(_BoundSpec(
    record=_rec(
        "B16", "Section 5, Corollary 5.2", "n ∈ ℝ and 2n/3 ∉ ℤ",
        "=", "identity",
        "floor(2n/3) + ceil((2n+1)/3) = 5/6 + 2n/3 + floor(2n/3) + (1/pi)*sum_k sin((2pi*k+4pi*n*k)/3)/k",
        "stated for 2n/3 not an integer; evaluated only away from the floor/ceil jumps unless asked",
    ),
    requires=(),
))


def catalog() -> list[BoundRecord]:
    """The fixed catalog, ordered by identifier."""
    return [_SPECS[k].record for k in sorted(_SPECS)]


def catalog_ids() -> list[str]:
    return sorted(_SPECS)


def lookup(bound_id: str) -> BoundRecord:
    try:
        return _SPECS[bound_id].record
    except KeyError as exc:
        raise KeyError(f"unknown bound id {bound_id!r}") from exc


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def _has_symbol(inst: Instance, sym: str) -> bool:
    if sym == "irr":
        return inst.irr is not None
    if sym == "irr_min":
        return inst.irr_min is not None
    if sym == "irr_max":
        return inst.irr_max is not None
    if sym == "tree":
        return inst.tree is not None
    if sym == "alpha":
        return inst.stats.alpha is not None
    if sym == "beta":
        return inst.stats.beta is not None
    if sym == "d3":
        return inst.n >= 3 and len(inst.degree_sequence.degrees) >= 3
    raise ValueError(f"unknown symbol {sym!r}")


_REL_CHECK = {
    "<": lambda c: c < 0,
    "<=": lambda c: c <= 0,
    ">": lambda c: c > 0,
    ">=": lambda c: c >= 0,
    "=": lambda c: c == 0,
}


def _slack(lhs, rhs):
    """rhs - lhs; exact when the sides live in one radical field, else float."""
    try:
        return rhs - lhs
    except (ValueError, TypeError):
        return rhs.approx() - lhs.approx()


def _evaluate_b16(inst_n, mode: str, opts: EngineOptions) -> Verdict:
    nf = Fraction(inst_n)
    if (2 * nf / 3).denominator == 1:
        return Verdict("B16", NOT_APPLICABLE, mode=mode, note="2n/3 is an integer")
    dist = _distance_to_series_discontinuity(nf)
    if dist < opts.discontinuity_margin and not opts.include_discontinuities:
        return Verdict(
            "B16", NOT_APPLICABLE, mode=mode,
            note=f"within {float(opts.discontinuity_margin)} of a floor/ceil jump",
        )
    lhs = float(series_lhs(nf))
    rhs = series_rhs(nf, opts.series_terms)
    status = HOLDS if abs(lhs - rhs) <= opts.series_tol else VIOLATED
    params = (("terms", str(opts.series_terms)), ("tol", repr(opts.series_tol)))
    return Verdict("B16", status, lhs=lhs, rhs=rhs, slack=rhs - lhs, mode=mode, params=params)


def evaluate_bound(
    record: BoundRecord | str,
    inst: Instance,
    mode: str = "literal",
    options: EngineOptions | None = None,
) -> Verdict:
    """Evaluate one record on one instance; never raises for math reasons."""
    bound_id = record if isinstance(record, str) else record.bound_id
    spec = _SPECS[bound_id]
    opts = options or EngineOptions()
    if mode not in ("literal", "proof"):
        raise ValueError(f"mode must be 'literal' or 'proof', got {mode!r}")
    for sym in spec.requires:
        if not _has_symbol(inst, sym):
            return Verdict(bound_id, NOT_APPLICABLE, mode=mode, note=f"missing symbol: {sym}")
    if bound_id == "B16":
        return _evaluate_b16(inst.n, mode, opts)
    if spec.literal_pred is not None and not spec.literal_pred(inst):
        return Verdict(bound_id, NOT_APPLICABLE, mode=mode, note="stated condition fails")
    if mode == "proof" and spec.proof_pred is not None and not spec.proof_pred(inst):
        return Verdict(bound_id, NOT_APPLICABLE, mode=mode, note="proof assumption fails")
    try:
        terms, rels, params = spec.compute(inst, opts)
    except ZeroDivisionError:
        return Verdict(bound_id, UNDEFINED, mode=mode, note="zero denominator")
    except NegativeRadicand:
        return Verdict(bound_id, UNDEFINED, mode=mode, note="square root of a negative")
    ok = True
    for left, right, rel in zip(terms, terms[1:], rels):
        if not _REL_CHECK[rel](left.compare(right)):
            ok = False
            break
    lhs, rhs = terms[0], terms[-1]
    return Verdict(
        bound_id,
        HOLDS if ok else VIOLATED,
        lhs=lhs,
        rhs=rhs,
        slack=_slack(lhs, rhs),
        mode=mode,
        params=params,
    )


def evaluate_all(
    inst: Instance, mode: str = "literal", options: EngineOptions | None = None
) -> list[Verdict]:
    """One verdict per catalog record, in identifier order."""
    return [evaluate_bound(r, inst, mode, options) for r in catalog()]


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _value_str(v) -> Optional[str]:
    if v is None:
        return None
    if isinstance(v, Exact):
        return format_exact(v)
    if isinstance(v, float):
        return "~" + repr(v)
    return str(v)


def _value_parse(s: Optional[str]):
    if s is None:
        return None
    if s.startswith("~"):
        return float(s[1:])
    from .exactval import parse_exact

    return parse_exact(s)


def verdict_to_json(v: Verdict, inst: "Instance | dict") -> str:
    """One-line JSON object with the instance summary embedded."""
    import json

    summary = inst.summary() if isinstance(inst, Instance) else dict(inst)
    obj = {
        "bound": v.bound_id,
        "status": v.status,
        "lhs": _value_str(v.lhs),
        "rhs": _value_str(v.rhs),
        "slack": _value_str(v.slack),
        "mode": v.mode,
        "instance": summary,
    }
    if v.params:
        obj["params"] = {k: val for k, val in v.params}
    if v.note:
        obj["note"] = v.note
    return json.dumps(obj, separators=(", ", ": "))


def verdict_from_json(text: str) -> tuple[Verdict, dict]:
    """Parse an emitted verdict; returns the verdict and the instance summary."""
    import json

    obj = json.loads(text)
    params = tuple((k, str(v)) for k, v in obj.get("params", {}).items())
    verdict = Verdict(
        bound_id=obj["bound"],
        status=obj["status"],
        lhs=_value_parse(obj["lhs"]),
        rhs=_value_parse(obj["rhs"]),
        slack=_value_parse(obj["slack"]),
        mode=obj["mode"],
        params=params,
        note=obj.get("note", ""),
    )
    return verdict, obj["instance"]


def verdict_csv_header() -> str:
    return "bound,status,lhs,rhs,slack,mode,n,m,degrees"


def verdict_csv_row(v: Verdict, inst: Instance) -> str:
    degrees = " ".join(str(d) for d in inst.degree_sequence.degrees)
    cells = [
        v.bound_id,
        v.status,
        _value_str(v.lhs) or "",
        _value_str(v.rhs) or "",
        _value_str(v.slack) or "",
        v.mode,
        str(inst.n),
        str(inst.m),
        degrees,
    ]
    return ",".join(cells)
