import itertools
import random

import pytest
from hypothesis import given, strategies as st

from ctlcs.cartesian import (
    CartesianTree,
    build_cartesian_tree,
    build_cartesian_tree_naive,
    ct_match,
    min_id,
    parent_distance,
    parent_distance_naive,
    rank_normalize,
    tree_isomorphic,
)
from ctlcs.errors import EmptySequenceError

seqs = st.lists(st.integers(-5, 5), max_size=24)


def test_min_id_examples():
    assert min_id([7]) == 1
    assert min_id([2, 1, 1, 3]) == 2
    assert min_id([12, 5, 3, 14, 2, 9, 4, 11]) == 5


def test_min_id_empty():
    with pytest.raises(EmptySequenceError, match="empty sequence"):
        min_id([])


def test_tree_examples():
    empty = build_cartesian_tree([])
    assert empty.n == 0 and empty.root is None

    tree = build_cartesian_tree([2, 1, 3])
    assert tree.root == 2 and tree.left_of(2) == 1 and tree.right_of(2) == 3

    tree = build_cartesian_tree([5, 3, 14, 2, 11])
    assert tree.root == 4
    assert tree.left_of(4) == 2 and tree.right_of(4) == 5
    assert tree.left_of(2) == 1 and tree.right_of(2) == 3
    assert tree.parent_of(1) == 2 and tree.parent_of(5) == 4


def test_ties_hang_to_the_right():
    tree = build_cartesian_tree([1, 1, 1])
    assert tree.root == 1 and tree.right_of(1) == 2 and tree.right_of(2) == 3


def test_stack_equals_naive_random():
    rng = random.Random(7)
    for _ in range(1000):
        s = [rng.randrange(rng.choice([2, 5, 100])) for _ in range(rng.randint(0, 64))]
        assert build_cartesian_tree(s) == build_cartesian_tree_naive(s)


@given(seqs)
def test_tree_structure(s):
    tree = build_cartesian_tree(s)
    assert tree.inorder() == list(range(1, len(s) + 1))
    if s:
        assert s[tree.root - 1] == min(s)
        assert [k for k in range(1, len(s) + 1) if tree.parent_of(k) is None] == [tree.root]
        for k in range(1, len(s) + 1):
            p = tree.parent_of(k)
            if p is not None:
                assert s[p - 1] <= s[k - 1]
            if tree.left_of(k) is not None:
                assert tree.left_of(k) < k
            if tree.right_of(k) is not None:
                assert tree.right_of(k) > k


def test_parent_distance_examples():
    assert parent_distance([1, 1, 1, 1, 1]) == (0, 1, 1, 1, 1)
    assert parent_distance([]) == ()
    assert parent_distance([3, 1, 2]) == (0, 0, 1)


@given(seqs)
def test_parent_distance_stack_equals_definition(s):
    pd = parent_distance(s)
    assert pd == parent_distance_naive(s)
    assert all(0 <= d <= i for i, d in enumerate(pd))


def test_ct_match_examples():
    assert ct_match([1, 1, 2], [1, 1, 1])
    assert not ct_match([1, 2], [2, 1])
    assert not ct_match([1, 2], [1, 2, 3])


@given(seqs)
def test_ct_match_reflexive_and_normalization(s):
    assert ct_match(s, s)
    assert ct_match(s, rank_normalize(s))


def test_tree_isomorphic_examples():
    assert tree_isomorphic(build_cartesian_tree([]), build_cartesian_tree([]))
    assert tree_isomorphic(build_cartesian_tree([1, 2]), build_cartesian_tree([3, 5]))
    assert tree_isomorphic(build_cartesian_tree([1, 1, 2]), build_cartesian_tree([1, 1, 1]))
    assert not tree_isomorphic(build_cartesian_tree([1, 2]), build_cartesian_tree([2, 1]))


@pytest.mark.parametrize("n", range(0, 11))
def test_isomorphism_iff_same_pd_binary(n):
    strings = list(itertools.product((0, 1), repeat=n))
    trees = {s: build_cartesian_tree(s) for s in strings}
    pds = {s: parent_distance(s) for s in strings}
    # pairs against a sample of anchors keeps this quadratic loop small
    anchors = strings[:: max(1, len(strings) // 24)]
    for a in anchors:
        for b in strings:
            assert tree_isomorphic(trees[a], trees[b]) == (pds[a] == pds[b])


@given(seqs, seqs)
def test_isomorphism_iff_same_pd_random(s, t):
    t = (t + s)[: len(s)]
    assert tree_isomorphic(build_cartesian_tree(s), build_cartesian_tree(t)) == (
        parent_distance(s) == parent_distance(t))


def test_rank_normalize_examples():
    assert rank_normalize([1, 1, 1]) == (1, 2, 3)
    assert rank_normalize([5, 3, 14, 2, 11]) == (3, 2, 5, 1, 4)


@given(st.lists(st.integers(-50, 50), unique=True, max_size=20))
def test_rank_normalize_distinct_is_order_isomorphic(s):
    out = rank_normalize(s)
    for a, b in itertools.combinations(range(len(s)), 2):
        assert (s[a] < s[b]) == (out[a] < out[b])


@given(seqs)
def test_rank_normalize_order(s):
    out = rank_normalize(s)
    assert sorted(out) == list(range(1, len(s) + 1))
    for a, b in itertools.combinations(range(len(s)), 2):
        assert (out[a] < out[b]) == (s[a] <= s[b])
    assert tree_isomorphic(build_cartesian_tree(s), build_cartesian_tree(out))


def test_serialization():
    tree = build_cartesian_tree([5, 3, 14, 2, 11])
    data = tree.to_dict()
    assert data == {"n": 5, "root": 4, "left": [None, 1, None, 2, None],
                    "right": [None, 3, None, 5, None]}
    assert CartesianTree.from_dict(data) == tree
    dot = tree.to_dot()
    assert dot.startswith("digraph CT {") and '4 -> 2 [label="L"];' in dot
    assert '2 -> 3 [label="R"];' in dot
    assert build_cartesian_tree([]).to_dot() == "digraph CT {\n}\n"
