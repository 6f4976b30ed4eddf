from math import comb

import pytest

from sweepcover.corpus import all_rooted_trees, rooted_tree_codes, tree_from_code
from sweepcover.counting import count_nonsingleton
from sweepcover.cover import make_cover, max_cover_size, validate
from sweepcover.enumeration import (
    InvalidSizeError,
    all_sweep_covers,
    brute_force_covers,
    compositions,
    find_sweep_covers,
    nonsingleton_partitions,
    set_partitions,
)
from sweepcover.tree import Tree, parse_tree

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140]


class TestCompositions:
    def test_three_into_two(self):
        assert list(compositions(3, 2)) == [(1, 2), (2, 1)]

    def test_too_many_parts(self):
        assert list(compositions(2, 3)) == []

    def test_five_into_three(self):
        got = list(compositions(5, 3))
        assert len(got) == comb(4, 2)
        assert all(sum(c) == 5 and all(p >= 1 for p in c) for c in got)

    def test_lexicographic_and_counts(self):
        for k in range(1, 13):
            for n in range(1, k + 1):
                got = list(compositions(k, n))
                assert got == sorted(got)
                assert len(got) == comb(k - 1, n - 1)
                assert len(set(got)) == len(got)


class TestSetPartitions:
    def test_pair(self):
        got = list(set_partitions(["a", "b"], 2))
        assert got == [(frozenset({"a", "b"}),), (frozenset({"a"}), frozenset({"b"}))]

    def test_bell_numbers(self):
        for n in range(1, 9):
            items = [str(i) for i in range(n)]
            got = list(set_partitions(items, n))
            assert len(got) == BELL[n]
            assert len({frozenset(p) for p in got}) == len(got)

    def test_single_block(self):
        assert list(set_partitions(["a", "b", "c"], 1)) == [(frozenset("abc"),)]

    def test_block_cap(self):
        got = list(set_partitions(list("abcd"), 2))
        assert all(len(p) <= 2 for p in got)


class TestNonsingletonPartitions:
    def test_four_into_two(self):
        got = list(nonsingleton_partitions(list("abcd"), 2))
        assert len(got) == 3
        assert {frozenset(p) for p in got} == {
            frozenset({frozenset("ab"), frozenset("cd")}),
            frozenset({frozenset("ac"), frozenset("bd")}),
            frozenset({frozenset("ad"), frozenset("bc")}),
        }

    def test_pigeonhole_empty(self):
        assert list(nonsingleton_partitions(list("abc"), 2)) == []

    def test_pair_single_block(self):
        assert list(nonsingleton_partitions(["a", "b"], 1)) == [(frozenset({"a", "b"}),)]

    def test_counts_match_formula(self):
        for n in range(11):
            items = [str(i) for i in range(n)]
            for m in range(1, 6):
                assert sum(1 for _ in nonsingleton_partitions(items, m)) == count_nonsingleton(
                    n, m
                ), (n, m)


class TestFindSweepCovers:
    def test_star_size_one(self):
        t = parse_tree("r a\nr b")
        assert find_sweep_covers(t, 1) == {make_cover([["r"]]), make_cover([["a", "b"]])}

    def test_star_size_two(self):
        t = parse_tree("r a\nr b")
        assert find_sweep_covers(t, 2) == {make_cover([["a"], ["b"]])}

    def test_beyond_max_size_is_empty(self):
        t = parse_tree("r a\nr b")
        assert find_sweep_covers(t, 3) == set()

    def test_path_trees_have_one_cover_per_node(self):
        for m in range(1, 11):
            labels = [f"p{i}" for i in range(m)]
            t = Tree(labels[0], {a: [b] for a, b in zip(labels, labels[1:])})
            per_size = all_sweep_covers(t)
            assert set(per_size) == {1}
            assert len(per_size[1]) == m

    def test_invalid_size(self):
        with pytest.raises(InvalidSizeError):
            find_sweep_covers(parse_tree("r a"), 0)

    def test_every_result_validates(self):
        t = parse_tree("r a\nr b\na c\na d\nb e")
        for n in range(1, max_cover_size(t) + 1):
            for cover in find_sweep_covers(t, n):
                assert len(cover) == n
                assert validate(t, cover).valid


class TestBruteForce:
    def test_star_size_one(self):
        t = parse_tree("r a\nr b")
        assert brute_force_covers(t, 1) == {make_cover([["r"]]), make_cover([["a", "b"]])}

    def test_fork_size_two(self):
        t = parse_tree("r a\nr b\na c\na d")
        assert brute_force_covers(t, 2) == {
            make_cover([["a"], ["b"]]),
            make_cover([["c", "d"], ["b"]]),
        }

    def test_no_cover_exceeds_leaf_count(self):
        for t in all_rooted_trees(5):
            assert brute_force_covers(t, max_cover_size(t) + 1) == set()

    def test_single_node_tree(self):
        t = parse_tree("r a").subtree("a")
        assert all_sweep_covers(t) == {1: {make_cover([["a"]])}}


def test_search_matches_brute_force_on_small_corpus():
    for t in all_rooted_trees(6):
        for n in range(1, max_cover_size(t) + 2):
            assert find_sweep_covers(t, n) == brute_force_covers(t, n), (t, n)


def test_rooted_tree_class_counts():
    # number of rooted-tree isomorphism classes for n = 1..8 nodes
    expected = [1, 1, 2, 4, 9, 20, 48, 115]
    assert [len(rooted_tree_codes(n)) for n in range(1, 9)] == expected


def test_tree_from_code_round_trip():
    from sweepcover.tree import canonical_code

    for code in rooted_tree_codes(6):
        assert canonical_code(tree_from_code(code)) == code
