"""Labeled/unlabeled enumeration, codec round trips, canonical forms."""

import itertools
import math
import random

import pytest

from irrforge.errors import BadLabel, CapExceeded, NotRealizable
from irrforge.treegen import (
    PruferCode,
    all_unlabeled_trees,
    canonical_form,
    count_labeled_trees,
    enumerate_labeled_trees,
    enumerate_unlabeled_trees,
    greedy_tree,
    next_permutation,
    prufer_decode,
    prufer_encode,
    random_tree,
)
from irrforge.trees import DegreeSequence, albertson_index, degree_sequence_of, make_tree


def test_decode_empty_code():
    assert prufer_decode(PruferCode(n=2, entries=())).edges == ((1, 2),)


def test_decode_star():
    t = prufer_decode(PruferCode(n=4, entries=(3, 3)))
    assert set(t.edges) == {(1, 3), (2, 3), (3, 4)}


def test_decode_path():
    t = prufer_decode(PruferCode(n=4, entries=(2, 3)))
    assert set(t.edges) == {(1, 2), (2, 3), (3, 4)}


def test_encode_examples():
    assert prufer_encode(make_tree(2, [(1, 2)])).entries == ()
    star = make_tree(4, [(1, 3), (2, 3), (3, 4)])
    assert prufer_encode(star).entries == (3, 3)
    p4 = make_tree(4, [(1, 2), (2, 3), (3, 4)])
    assert prufer_encode(p4).entries == (2, 3)


def test_code_degree_property():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(3, 9)
        code = tuple(rng.randint(1, n) for _ in range(n - 2))
        t = prufer_decode(PruferCode(n=n, entries=code))
        for v in range(1, n + 1):
            assert code.count(v) == t.degree(v) - 1


def test_round_trip_exhaustive():
    for n in range(2, 8):
        for code in itertools.product(range(1, n + 1), repeat=n - 2):
            p = PruferCode(n=n, entries=code)
            assert prufer_encode(prufer_decode(p)) == p


def test_bad_label():
    with pytest.raises(BadLabel):
        PruferCode(n=4, entries=(5, 1))
    with pytest.raises(BadLabel):
        PruferCode(n=4, entries=(1,))


@pytest.mark.parametrize(
    "degrees,expected",
    [((1, 1, 1, 3), 1), ((1, 1, 2, 2), 2), ((1, 1), 1), ((0,), 1)],
)
def test_count_examples(degrees, expected):
    assert count_labeled_trees(DegreeSequence(degrees)) == expected


def test_count_rejects_unrealizable():
    with pytest.raises(NotRealizable):
        count_labeled_trees(DegreeSequence((2, 2)))


def _all_sorted_sequences(n):
    """Non-decreasing positive tuples of length n summing to 2(n-1)."""
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

    if n == 1:
        return [(0,)]
    return list(rec(2 * (n - 1), n, 1))


def test_enumeration_matches_count():
    for n in range(2, 8):
        for degs in _all_sorted_sequences(n):
            seq = DegreeSequence(degs)
            got = sum(1 for _ in enumerate_labeled_trees(seq))
            assert got == count_labeled_trees(seq), degs


def test_enumeration_order_deterministic():
    seq = DegreeSequence((1, 1, 1, 2, 3))
    first = [t.edges for t in enumerate_labeled_trees(seq)]
    second = [t.edges for t in enumerate_labeled_trees(seq)]
    assert first == second
    codes = [prufer_encode(t).entries for t in enumerate_labeled_trees(seq)]
    assert codes == sorted(codes)


def test_cayley_partition_over_label_assignments():
    # sum of (n-2)!/prod((d_i - 1)!) over all degree assignments is n^(n-2)
    for n in range(3, 8):
        total = 0
        for comp in itertools.product(range(1, n), repeat=n):
            if sum(comp) != 2 * (n - 1):
                continue
            denom = 1
            for d in comp:
                denom *= math.factorial(d - 1)
            total += math.factorial(n - 2) // denom
        assert total == n ** (n - 2)


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_labeled_trees(DegreeSequence((1,) * 13 + (13,))))


def test_enumeration_cap_env_override(monkeypatch):
    from irrforge.treegen import enumeration_cap

    monkeypatch.setenv("IRRFORGE_MAX_N", "5")
    assert enumeration_cap() == 5
    with pytest.raises(CapExceeded):
        list(enumerate_labeled_trees(DegreeSequence((1, 1, 2, 2, 2, 2, 2, 2))))
    monkeypatch.setenv("IRRFORGE_MAX_N", "99")  # hard ceiling still applies
    assert enumeration_cap() == 12
    monkeypatch.setenv("IRRFORGE_MAX_N", "junk")
    assert enumeration_cap() == 12


def test_canonical_form_isomorphic_paths():
    a = make_tree(4, [(1, 2), (2, 3), (3, 4)])
    b = make_tree(4, [(4, 1), (1, 3), (3, 2)])
    assert canonical_form(a) == canonical_form(b)


def test_canonical_form_distinguishes():
    p4 = make_tree(4, [(1, 2), (2, 3), (3, 4)])
    star = make_tree(4, [(1, 2), (1, 3), (1, 4)])
    assert canonical_form(p4) != canonical_form(star)


def test_canonical_classes_on_four_vertices():
    codes = set()
    for code in itertools.product(range(1, 5), repeat=2):
        codes.add(canonical_form(prufer_decode(PruferCode(n=4, entries=code))).code)
    assert len(codes) == 2


def test_canonical_closed_under_relabeling():
    rng = random.Random(23)
    for _ in range(60):
        n = rng.randint(2, 9)
        code = tuple(rng.randint(1, n) for _ in range(n - 2))
        t = prufer_decode(PruferCode(n=n, entries=code)) if n > 2 else make_tree(2, [(1, 2)])
        labels = list(range(1, n + 1))
        rng.shuffle(labels)
        perm = dict(zip(range(1, n + 1), labels))
        s = make_tree(n, [(perm[u], perm[v]) for u, v in t.edges])
        assert canonical_form(t) == canonical_form(s)


@pytest.mark.parametrize(
    "degrees,classes",
    [((1, 1, 1, 1, 3, 3), 1), ((1, 1, 2, 2), 1), ((1, 1, 1, 1, 2, 2, 2, 2, 4), 5)],
)
def test_unlabeled_class_counts(degrees, classes):
    # the third count is pinned by the union-find oracle in the acceptance suite
    assert len(enumerate_unlabeled_trees(DegreeSequence(degrees))) == classes


def test_unlabeled_output_sorted_by_code():
    reps = enumerate_unlabeled_trees(DegreeSequence((1, 1, 1, 2, 3)))
    codes = [canonical_form(t).code for t in reps]
    assert codes == sorted(codes)


def test_all_unlabeled_trees_against_sequence_route():
    # two independent generators of the same family
    for n in range(1, 9):
        via_shapes = {canonical_form(t).code for t in all_unlabeled_trees(n)}
        via_sequences = set()
        for degs in _all_sorted_sequences(n):
            for t in enumerate_unlabeled_trees(DegreeSequence(degs)):
                via_sequences.add(canonical_form(t).code)
        assert via_shapes == via_sequences


def test_all_unlabeled_trees_cap():
    with pytest.raises(CapExceeded):
        all_unlabeled_trees(13)


def test_greedy_examples():
    g = greedy_tree(DegreeSequence((1, 1, 1, 1, 3, 3)))
    assert albertson_index(g) == 8
    assert albertson_index(greedy_tree(DegreeSequence((1, 1, 1, 3)))) == 6
    assert albertson_index(greedy_tree(DegreeSequence((1, 1, 2, 2)))) == 2


def test_greedy_realizes_sequence():
    for degs in _all_sorted_sequences(7):
        g = greedy_tree(DegreeSequence(degs))
        assert degree_sequence_of(g).degrees == degs


def test_greedy_appears_among_unlabeled():
    for degs in _all_sorted_sequences(7):
        seq = DegreeSequence(degs)
        g_code = canonical_form(greedy_tree(seq))
        reps = {canonical_form(t) for t in enumerate_unlabeled_trees(seq)}
        assert g_code in reps


def test_random_tree_unique_realization():
    for seed in (0, 1, 99):
        t = random_tree(DegreeSequence((1, 1, 1, 3)), seed)
        assert degree_sequence_of(t).degrees == (1, 1, 1, 3)


def test_random_tree_deterministic_per_seed():
    a = random_tree(DegreeSequence((1, 1, 1, 2, 2, 3)), 123)
    b = random_tree(DegreeSequence((1, 1, 1, 2, 2, 3)), 123)
    assert a == b


def test_random_tree_roughly_uniform():
    seq = DegreeSequence((1, 1, 2, 2))
    counts = {}
    for seed in range(10_000):
        t = random_tree(seq, seed)
        counts[t.edges] = counts.get(t.edges, 0) + 1
    assert len(counts) == 2
    for c in counts.values():
        assert abs(c / 10_000 - 0.5) < 0.05


def test_next_permutation_enumerates_multiset():
    a = [1, 1, 2]
    seen = [tuple(a)]
    while next_permutation(a):
        seen.append(tuple(a))
    assert seen == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
