"""Extremal searches over arrangements and realizations."""

import itertools
import random

import pytest

from irrforge.caterpillar import BackboneArrangement, build_caterpillar, closed_form_irr
from irrforge.errors import CapExceeded, NoValidArrangement, NotRealizable, TooLarge
from irrforge.extremal import (
    Interpretation,
    compare_greedy_to_bruteforce,
    extremal_over_arrangements,
    extremal_over_realizations,
    min_adjacency_arrangement,
)
from irrforge.trees import DegreeSequence, albertson_index


def _brute_arrangements(ms):
    """Independent search over raw permutations, for cross-checking."""
    vals = []
    for p in set(itertools.permutations(ms)):
        if p[0] >= 1 and p[-1] >= 1 and all(b >= 2 for b in p[1:-1]):
            vals.append(albertson_index(build_caterpillar(BackboneArrangement(p))))
    return min(vals), max(vals)


def test_arrangements_singleton_family():
    res = extremal_over_arrangements((1, 2, 3))
    assert res.min_value == 6 and res.max_value == 6
    assert res.instances_examined == 2


def test_arrangements_main_example():
    res = extremal_over_arrangements((2, 4, 5, 7, 9))
    assert res.min_value == 120
    assert res.argmin.spine == (2, 4, 5, 7, 9)
    assert res.max_value == 132
    assert res.instances_examined == 60


def test_arrangements_constant_multiset():
    res = extremal_over_arrangements((2, 2, 2))
    assert res.min_value == res.max_value == 2
    assert res.instances_examined == 1


def test_arrangements_match_independent_brute_force():
    rng = random.Random(5)
    for _ in range(25):
        k = rng.randint(2, 6)
        ms = sorted(rng.randint(1, 7) for _ in range(k))
        if sum(1 for b in ms if b == 1) > 2:
            continue
        res = extremal_over_arrangements(ms)
        lo, hi = _brute_arrangements(tuple(ms))
        assert (res.min_value, res.max_value) == (lo, hi)


def test_arrangements_input_order_irrelevant():
    a = extremal_over_arrangements((9, 2, 7, 4, 5))
    b = extremal_over_arrangements((2, 4, 5, 7, 9))
    assert a == b


def test_arrangements_witnesses_reproduce():
    res = extremal_over_arrangements((1, 3, 3, 5))
    assert closed_form_irr(res.argmin) == res.min_value
    assert closed_form_irr(res.argmax) == res.max_value


def test_arrangements_rejections():
    with pytest.raises(NoValidArrangement):
        extremal_over_arrangements((1, 1, 1, 2))
    with pytest.raises(NoValidArrangement):
        extremal_over_arrangements((3,))
    with pytest.raises(CapExceeded):
        extremal_over_arrangements((2,) * 10)


def test_realizations_unique_tree():
    res = extremal_over_realizations(DegreeSequence((1, 1, 2, 2)))
    assert res.min_value == res.max_value == 2
    assert res.instances_examined == 1
    assert res.interpretation is Interpretation.FULL_REALIZATIONS


def test_realizations_unique_double_star():
    res = extremal_over_realizations(DegreeSequence((1, 1, 1, 1, 3, 3)))
    assert res.min_value == res.max_value == 8


def test_realizations_spread_sequence():
    res = extremal_over_realizations(DegreeSequence((1, 1, 1, 1, 1, 2, 3, 4)))
    assert res.min_value < res.max_value
    assert albertson_index(res.argmin) == res.min_value
    assert albertson_index(res.argmax) == res.max_value


def test_realizations_errors():
    with pytest.raises(NotRealizable):
        extremal_over_realizations(DegreeSequence((2, 2)))
    with pytest.raises(TooLarge):
        extremal_over_realizations(DegreeSequence((1,) * 12 + (12,)))


def test_min_adjacency_examples():
    assert min_adjacency_arrangement((2, 4, 5, 7, 9)) == ((2, 4, 5, 7, 9), 7)
    assert min_adjacency_arrangement((3, 3, 3)) == ((3, 3, 3), 0)
    assert min_adjacency_arrangement((1, 9)) == ((1, 9), 8)


def test_min_adjacency_is_optimal():
    rng = random.Random(31)
    for _ in range(40):
        k = rng.randint(2, 7)
        ms = tuple(sorted(rng.randint(1, 9) for _ in range(k)))
        best = min(
            sum(abs(p[i] - p[i + 1]) for i in range(k - 1))
            for p in set(itertools.permutations(ms))
        )
        arrangement, value = min_adjacency_arrangement(ms)
        assert value == best == max(ms) - min(ms)
        assert arrangement == ms


def test_greedy_comparison_examples():
    c = compare_greedy_to_bruteforce(DegreeSequence((1, 1, 1, 3)))
    assert c.greedy_value == 6 and c.brute_min == 6 and c.equal
    c = compare_greedy_to_bruteforce(DegreeSequence((1, 1, 2, 2)))
    assert c.greedy_value == 2 and c.brute_min == 2 and c.equal


def test_realization_cap_env_override(monkeypatch):
    from irrforge.extremal import realization_cap

    assert realization_cap() == 10
    monkeypatch.setenv("IRRFORGE_MAX_N", "11")
    assert realization_cap() == 11
    monkeypatch.setenv("IRRFORGE_MAX_N", "40")
    assert realization_cap() == 12


def test_greedy_corpus_scan_emits_summary():
    # the greedy-vs-brute comparison is data, never an asserted equality;
    # the records themselves must stay internally consistent
    def sequences(n):
        def rec(total, parts, lo):
            if parts == 0:
                if total == 0:
                    yield ()
                return
            for first in range(lo, total + 1):
                if first * parts > total:
                    break
                for rest in rec(total - first, parts - 1, first):
                    yield (first,) + rest

        return rec(2 * (n - 1), n, 1)

    records = []
    for n in range(2, 9):
        for degs in sequences(n):
            records.append(compare_greedy_to_bruteforce(DegreeSequence(degs)))
    assert all(c.equal == (c.greedy_value == c.brute_min) for c in records)
    assert all(c.greedy_value >= c.brute_min for c in records)
    agree = sum(1 for c in records if c.equal)
    print(f"greedy attains the minimum on {agree}/{len(records)} sequences with n <= 8")


def test_greedy_within_extremal_bounds():
    from irrforge.treegen import greedy_tree

    def sequences(n):
        def rec(total, parts, lo):
            if parts == 0:
                if total == 0:
                    yield ()
                return
            for first in range(lo, total + 1):
                if first * parts > total:
                    break
                for rest in rec(total - first, parts - 1, first):
                    yield (first,) + rest

        return rec(2 * (n - 1), n, 1)

    for n in range(2, 8):
        for degs in sequences(n):
            seq = DegreeSequence(degs)
            res = extremal_over_realizations(seq)
            g = albertson_index(greedy_tree(seq))
            assert res.min_value <= g <= res.max_value
