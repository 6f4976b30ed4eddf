"""Sweep-cover algebra: validation, child swapping, induced subtrees, embeddings.

A cover is represented as a frozenset of non-empty frozensets of node labels.
All operations are pure functions of immutable inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .tree import Tree, UnknownNodeError

Block = frozenset
Cover = frozenset

#: Condition identifiers, in report order.
CONDITIONS = ("disjoint", "siblings", "coverage", "no-ancestry")


class CoverError(Exception):
    """Base class for cover operation failures."""


class InvalidCoverError(CoverError):
    """An operation required a valid sweep-cover but the input is not one."""


class NotASingletonMemberError(CoverError):
    pass


class NotAPartitionOfChildrenError(CoverError):
    pass


class LeafNodeError(CoverError):
    pass


class BadSelectionError(CoverError):
    pass


def make_cover(blocks: Iterable[Iterable[str]]) -> Cover:
    """Normalize an iterable of node groups into a cover value."""
    out = []
    for b in blocks:
        fs = frozenset(b)
        if not fs:
            raise CoverError("cover blocks must be non-empty")
        out.append(fs)
    return frozenset(out)


def cover_nodes(cover: Cover) -> frozenset[str]:
    return frozenset().union(*cover) if cover else frozenset()


def canonical_blocks(cover: Cover) -> tuple[tuple[str, ...], ...]:
    """Deterministic ordering: sorted tuples of sorted labels."""
    return tuple(sorted(tuple(sorted(b)) for b in cover))


def cover_to_json(cover: Cover) -> str:
    """Serialize as a JSON array of arrays of labels, canonical ordering."""
    return json.dumps([list(b) for b in canonical_blocks(cover)])


def cover_from_json(text: str) -> Cover:
    data = json.loads(text)
    if not isinstance(data, list) or not all(isinstance(b, list) for b in data):
        raise CoverError("expected a JSON array of arrays of node labels")
    return make_cover(data)


@dataclass(frozen=True)
class CoverReport:
    """Verdict of checking a cover against the four defining conditions."""

    valid: bool
    violations: tuple[str, ...]
    witness: tuple[str, ...] | None = None


def cover_relatives(tree: Tree, cover: Cover) -> tuple[set[str], set[str]]:
    """(ancestors, descendants) of the union of all cover blocks."""
    return tree.relatives(cover_nodes(cover))


def validate(tree: Tree, cover: Cover) -> CoverReport:
    """Check all four sweep-cover conditions, reporting every violated one."""
    for v in cover_nodes(cover):
        if v not in tree:
            raise UnknownNodeError(f"unknown node {v!r}")
    violations: list[str] = []
    witness: tuple[str, ...] | None = None

    def flag(cond: str, wit: tuple[str, ...]) -> None:
        nonlocal witness
        violations.append(cond)
        if witness is None:
            witness = wit

    # 1: distinct blocks are pairwise disjoint.
    blocks = canonical_blocks(cover)
    seen: dict[str, tuple[str, ...]] = {}
    for b in blocks:
        for v in b:
            if v in seen and seen[v] != b:
                flag("disjoint", (v,))
                break
            seen[v] = b
        if "disjoint" in violations:
            break

    # 2: each block contains only siblings.
    for b in blocks:
        parents = {tree.parent_of(v) for v in b}
        if len(parents) > 1:
            flag("siblings", b)
            break

    # 3: blocks plus all their ancestors and descendants exhaust the nodes.
    members = cover_nodes(cover)
    ancestors, descendants = tree.relatives(members)
    uncovered = tree.nodes - members - ancestors - descendants
    if uncovered:
        flag("coverage", (min(uncovered),))

    # 4: no two cover nodes are in an ancestor-descendant relation.
    for v in sorted(members):
        hit = tree.ancestors_of(v) & members
        if hit:
            flag("no-ancestry", (min(hit), v))
            break

    return CoverReport(valid=not violations, violations=tuple(violations), witness=witness)


def swap_children(
    tree: Tree, cover: Cover, v: str, child_partition: Iterable[Iterable[str]]
) -> Cover:
    """Replace the singleton block {v} with a partition of v's children.

    The result is again a valid sweep-cover whenever the input was.
    """
    singleton = frozenset({v})
    if singleton not in cover:
        raise NotASingletonMemberError(f"{{{v}}} is not a singleton member of the cover")
    kids = tree.children_of(v)
    if not kids:
        raise LeafNodeError(f"node {v} has no children")
    parts = [frozenset(p) for p in child_partition]
    if any(not p for p in parts):
        raise NotAPartitionOfChildrenError("partition blocks must be non-empty")
    total = sum(len(p) for p in parts)
    union = frozenset().union(*parts) if parts else frozenset()
    if union != frozenset(kids) or total != len(kids):
        raise NotAPartitionOfChildrenError(
            f"blocks do not partition the children of {v}: {sorted(kids)}"
        )
    return (cover - {singleton}) | frozenset(parts)


def induced_subgraphs(tree: Tree, cover: Cover) -> list[Tree]:
    """One subtree per block: the block plus all its ancestors and descendants.

    Each returned tree keeps the original labels and is rooted at the
    original root.  Order follows the canonical block ordering.
    """
    report = validate(tree, cover)
    if not report.valid:
        raise InvalidCoverError(f"cover violates: {report.violations}")
    out = []
    for b in canonical_blocks(cover):
        ancestors, descendants = tree.relatives(b)
        keep = set(b) | ancestors | descendants
        children = {
            v: [c for c in tree.children_of(v) if c in keep]
            for v in keep
            if any(c in keep for c in tree.children_of(v))
        }
        out.append(Tree(tree.root, children))
    return out


def embedding_tree(tree: Tree, cover: Cover, selection: Mapping[int, str]) -> Tree:
    """Union of the root paths to one chosen representative per block.

    `selection` maps the index of each block (canonical ordering) to one of
    its members.  Any two selections from the same cover give isomorphic
    trees.
    """
    report = validate(tree, cover)
    if not report.valid:
        raise InvalidCoverError(f"cover violates: {report.violations}")
    blocks = canonical_blocks(cover)
    if set(selection) != set(range(len(blocks))):
        raise BadSelectionError(f"selection must cover block indices 0..{len(blocks) - 1}")
    chosen = []
    for i, b in enumerate(blocks):
        if selection[i] not in b:
            raise BadSelectionError(f"{selection[i]!r} is not in block {b}")
        chosen.append(selection[i])
    keep = {tree.root}
    for v in chosen:
        keep.add(v)
        keep |= tree.ancestors_of(v)
    children = {
        v: [c for c in tree.children_of(v) if c in keep]
        for v in keep
        if any(c in keep for c in tree.children_of(v))
    }
    return Tree(tree.root, children)


def max_cover_size(tree: Tree) -> int:
    """Largest possible sweep-cover size: the number of leaves."""
    return len(tree.leaves())
