"""Explicit enumeration: combinatorial generators and sweep-cover search.

`find_sweep_covers` is the recursive search; `brute_force_covers` is a
deliberately naive exponential reference kept independent of it.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .cover import Cover, make_cover, validate, max_cover_size
from .tree import Tree


class InvalidSizeError(ValueError):
    """Requested cover size is below 1."""


# -- generators --------------------------------------------------------


def compositions(k: int, n: int) -> Iterator[tuple[int, ...]]:
    """All ordered lists of n positive integers summing to k, lexicographic.

    Empty when k < n.
    """
    if k < 0 or n < 1:
        return
    if n == 1:
        if k >= 1:
            yield (k,)
        return
    for first in range(1, k - n + 2):
        for rest in compositions(k - first, n - 1):
            yield (first,) + rest


def set_partitions(
    elements: Iterable[str], max_blocks: int
) -> Iterator[tuple[frozenset[str], ...]]:
    """All partitions of `elements` into at most `max_blocks` non-empty blocks.

    Enumerated via restricted-growth strings, so each partition appears
    exactly once and the order is deterministic for a fixed element order.
    """
    items = list(elements)
    if not items or max_blocks < 1:
        return
    assign = [0] * len(items)

    def rec(i: int, used: int) -> Iterator[tuple[frozenset[str], ...]]:
        if i == len(items):
            blocks: list[list[str]] = [[] for _ in range(used)]
            for idx, b in enumerate(assign):
                blocks[b].append(items[idx])
            yield tuple(frozenset(b) for b in blocks)
            return
        for b in range(min(used + 1, max_blocks)):
            assign[i] = b
            yield from rec(i + 1, max(used, b + 1))

    yield from rec(0, 0)


def nonsingleton_partitions(
    elements: Iterable[str], m: int
) -> Iterator[tuple[frozenset[str], ...]]:
    """Partitions of `elements` into exactly m blocks, each of size >= 2."""
    items = list(elements)
    if m < 1 or 2 * m > len(items):
        return
    for part in set_partitions(items, m):
        if len(part) == m and all(len(b) >= 2 for b in part):
            yield part


# -- recursive cover search --------------------------------------------


def find_sweep_covers(tree: Tree, n: int) -> set[Cover]:
    """All sweep-covers of size n, found by recursive decomposition.

    Size 1: one singleton per node on the linear path from the root to its
    lowest known descendant, plus the descendant's full child set when it
    has children.  Size n >= 2: split the child set into singletons L and
    non-singleton blocks R, distribute the remaining size over the subtrees
    rooted at L via compositions, and combine subtree covers with R.
    """
    if n < 1:
        raise InvalidSizeError(f"cover size must be >= 1, got {n}")
    path = tree.linear_path_from(tree.root)
    child_set = tree.children_of(path[-1])
    covers: set[Cover] = set()
    if n == 1:
        for v in path:
            covers.add(make_cover([[v]]))
        if child_set:
            covers.add(make_cover([child_set]))
        return covers
    if not child_set:
        return covers
    for part in set_partitions(sorted(child_set), min(n, len(child_set))):
        nonsingletons = frozenset(b for b in part if len(b) > 1)
        singles = sorted(next(iter(b)) for b in part if len(b) == 1)
        if not singles:
            if len(nonsingletons) == n:
                covers.add(frozenset(part))
            continue
        remaining = n - len(nonsingletons)
        if remaining < len(singles):
            continue
        subtrees = [tree.subtree(v) for v in singles]
        for sizes in compositions(remaining, len(singles)):
            pools = [find_sweep_covers(sub, size) for sub, size in zip(subtrees, sizes)]
            if not all(pools):
                continue
            for combo in itertools.product(*pools):
                blocks: set[frozenset[str]] = set(nonsingletons)
                for sub_cover in combo:
                    blocks |= sub_cover
                if len(blocks) == n:
                    covers.add(frozenset(blocks))
    return covers


def brute_force_covers(tree: Tree, n: int) -> set[Cover]:
    """Exhaustive reference enumeration, independent of the recursive search.

    Candidate blocks are the root singleton and every non-empty subset of
    some node's children (condition 2 makes other blocks impossible).
    Collections of n mutually compatible blocks are filtered through the
    full validator.
    """
    if n < 1:
        raise InvalidSizeError(f"cover size must be >= 1, got {n}")
    blocks: list[frozenset[str]] = [frozenset({tree.root})]
    for v in sorted(tree.nodes):
        kids = sorted(tree.children_of(v))
        for r in range(1, len(kids) + 1):
            for combo in itertools.combinations(kids, r):
                blocks.append(frozenset(combo))

    closure = {b: frozenset().union(*(tree.ancestors_of(x) for x in b)) for b in blocks}

    def compatible(a: frozenset[str], b: frozenset[str]) -> bool:
        # Disjoint and no cross ancestor-descendant relation; coverage is
        # left to the final validate call.
        return not (a & b) and not (a & closure[b]) and not (b & closure[a])

    results: set[Cover] = set()

    def extend(start: int, chosen: list[frozenset[str]]) -> None:
        if len(chosen) == n:
            cover = frozenset(chosen)
            if validate(tree, cover).valid:
                results.add(cover)
            return
        for i in range(start, len(blocks)):
            b = blocks[i]
            if all(compatible(b, c) for c in chosen):
                chosen.append(b)
                extend(i + 1, chosen)
                chosen.pop()

    extend(0, [])
    return results


def all_sweep_covers(tree: Tree) -> dict[int, set[Cover]]:
    """Covers of every size from 1 to the leaf count, keyed by size."""
    return {n: find_sweep_covers(tree, n) for n in range(1, max_cover_size(tree) + 1)}
