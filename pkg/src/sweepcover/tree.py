"""Rooted directed trees with the structural queries used by sweep-cover analysis.

Trees are immutable after construction and safe to share between threads.
Node labels are opaque strings; anything that produces deterministic output
sorts labels lexicographically.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping


class TreeError(Exception):
    """Base class for tree construction and query failures."""


class EmptyDocumentError(TreeError):
    """Edge-list document contained no edges."""


class MultipleRootsError(TreeError):
    """More than one node has no parent (the edges describe a forest)."""


class CycleError(TreeError):
    """The edges contain a cycle."""


class DuplicateEdgeError(TreeError):
    """The same parent-child edge was listed twice."""


class MultipleParentsError(TreeError):
    """A node was given two distinct parents."""


class UnknownNodeError(TreeError):
    """A queried node does not belong to the tree."""


def _check_label(label: str) -> None:
    if not label:
        raise TreeError("empty node label")
    if "#" in label or any(ch.isspace() for ch in label):
        raise TreeError(f"node label contains whitespace or '#': {label!r}")


class Tree:
    """Immutable rooted directed tree over string-labeled nodes.

    `children` maps a node to the ordered list of its children; nodes that
    appear only as children need no entry.  Construction validates that the
    edges form a single tree rooted at `root`.
    """

    __slots__ = ("root", "_children", "_parent", "_depth")

    def __init__(self, root: str, children: Mapping[str, Iterable[str]]):
        child_map: dict[str, tuple[str, ...]] = {}
        parent: dict[str, str] = {}
        nodes = {root}
        _check_label(root)
        for p, kids in children.items():
            _check_label(p)
            kids = tuple(kids)
            seen: set[str] = set()
            for c in kids:
                _check_label(c)
                if c in seen:
                    raise DuplicateEdgeError(f"duplicate edge {p} -> {c}")
                seen.add(c)
                if c in parent:
                    raise MultipleParentsError(f"node {c} has parents {parent[c]} and {p}")
                parent[c] = p
            child_map[p] = kids
            nodes.add(p)
            nodes.update(kids)
        if root in parent:
            raise CycleError(f"root {root} has a parent")
        # BFS from the root: every node must be reached exactly once.
        depth = {root: 0}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for c in child_map.get(v, ()):
                depth[c] = depth[v] + 1
                queue.append(c)
        if len(depth) != len(nodes):
            stranded = sorted(nodes - depth.keys())
            orphans = [v for v in stranded if v not in parent]
            if orphans:
                raise MultipleRootsError(f"unreachable parentless nodes: {orphans}")
            raise CycleError(f"nodes not reachable from root: {stranded}")
        self.root = root
        self._children = child_map
        self._parent = parent
        self._depth = depth

    # -- basic queries -------------------------------------------------

    @property
    def nodes(self) -> frozenset[str]:
        return frozenset(self._depth)

    def __len__(self) -> int:
        return len(self._depth)

    def __contains__(self, label: str) -> bool:
        return label in self._depth

    def _require(self, v: str) -> None:
        if v not in self._depth:
            raise UnknownNodeError(f"unknown node {v!r}")

    def children_of(self, v: str) -> tuple[str, ...]:
        self._require(v)
        return self._children.get(v, ())

    def parent_of(self, v: str) -> str | None:
        self._require(v)
        return self._parent.get(v)

    def out_degree(self, v: str) -> int:
        return len(self.children_of(v))

    def is_leaf(self, v: str) -> bool:
        return self.out_degree(v) == 0

    def leaves(self) -> tuple[str, ...]:
        return tuple(sorted(v for v in self._depth if not self._children.get(v)))

    def edges(self) -> tuple[tuple[str, str], ...]:
        """All edges, parents in sorted order, children in stored order."""
        out = []
        for p in sorted(self._children):
            for c in self._children[p]:
                out.append((p, c))
        return tuple(out)

    def depth(self, v: str) -> int:
        """Number of edges on the unique root-to-v path; depth(root) == 0."""
        self._require(v)
        return self._depth[v]

    # -- structural queries --------------------------------------------

    def linear_path_from(self, v: str) -> tuple[str, ...]:
        """Maximal chain starting at v whose interior nodes all have out-degree 1.

        The chain stops at the first node whose out-degree differs from 1.
        """
        self._require(v)
        path = [v]
        while self.out_degree(path[-1]) == 1:
            path.append(self._children[path[-1]][0])
        return tuple(path)

    def lowest_known_descendant(self, v: str) -> str:
        """Endpoint of the maximal linear path from v; equals v when out-degree(v) != 1."""
        return self.linear_path_from(v)[-1]

    def ancestors_of(self, v: str) -> set[str]:
        """Proper ancestors of v, root included."""
        self._require(v)
        out = set()
        while (p := self._parent.get(v)) is not None:
            out.add(p)
            v = p
        return out

    def descendants_of(self, v: str) -> set[str]:
        """Proper descendants of v."""
        self._require(v)
        out: set[str] = set()
        stack = list(self.children_of(v))
        while stack:
            u = stack.pop()
            out.add(u)
            stack.extend(self._children.get(u, ()))
        return out

    def relatives(self, vs: Iterable[str]) -> tuple[set[str], set[str]]:
        """(proper ancestors, proper descendants) of any member of vs."""
        vs = list(vs)
        ancestors: set[str] = set()
        descendants: set[str] = set()
        for v in vs:
            ancestors |= self.ancestors_of(v)
            descendants |= self.descendants_of(v)
        return ancestors, descendants

    def subtree(self, v: str) -> "Tree":
        """The subtree rooted at v, with original labels."""
        self._require(v)
        keep = self.descendants_of(v) | {v}
        children = {u: self._children[u] for u in keep if self._children.get(u)}
        return Tree(v, children)

    def __repr__(self) -> str:
        return f"Tree(root={self.root!r}, nodes={len(self)})"


# -- edge-list file format ---------------------------------------------


def parse_tree(text: str) -> Tree:
    """Parse a newline-delimited "parent child" edge list into a Tree.

    '#' starts a comment; blank lines are ignored.  Children keep the order
    in which their edges appear.
    """
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise TreeError(f"line {lineno}: expected 'parent child', got {raw!r}")
        edges.append((fields[0], fields[1]))
    if not edges:
        raise EmptyDocumentError("no edges in document")

    children: dict[str, list[str]] = {}
    parent: dict[str, str] = {}
    for p, c in edges:
        if parent.get(c) == p:
            raise DuplicateEdgeError(f"duplicate edge {p} -> {c}")
        if c in parent:
            raise MultipleParentsError(f"node {c} has parents {parent[c]} and {p}")
        parent[c] = p
        children.setdefault(p, []).append(c)

    roots = sorted(set(children) - set(parent))
    if len(roots) > 1:
        raise MultipleRootsError(f"multiple root candidates: {roots}")
    if not roots:
        raise CycleError("every node has a parent; the edges contain a cycle")
    return Tree(roots[0], children)


def serialize_tree(tree: Tree) -> str:
    """One "parent child" line per edge, parents and children both sorted."""
    lines = []
    for p in sorted(tree.nodes):
        for c in sorted(tree.children_of(p)):
            lines.append(f"{p} {c}")
    return "\n".join(lines) + "\n" if lines else ""


# -- truncated ILD trees -----------------------------------------------


@dataclass(frozen=True)
class IldSpec:
    """Parameters of a truncated tree of stars joined by constant-length paths.

    delta: out-degree of every star node (>= 2).
    gamma: number of edges on the path leading into each star (>= 0).
    star_levels: how many star generations to materialize (>= 1).
    """

    delta: int
    gamma: int
    star_levels: int

    def __post_init__(self) -> None:
        if self.delta < 2:
            raise ValueError(f"delta must be >= 2, got {self.delta}")
        if self.gamma < 0:
            raise ValueError(f"gamma must be >= 0, got {self.gamma}")
        if self.star_levels < 1:
            raise ValueError(f"star_levels must be >= 1, got {self.star_levels}")


def build_ild_truncated(spec: IldSpec) -> Tree:
    """Finite truncation of the infinite star-and-path tree.

    From the root, a path of `gamma` edges reaches the first star; every star
    child heads another `gamma`-edge path to the next star, repeated
    `star_levels` times.  Labels encode the root path: "s", path steps as
    "<head>p<i>", star children as "<star>.<j>".
    """
    children: dict[str, list[str]] = {}

    def grow(head: str, levels_left: int) -> None:
        if levels_left == 0:
            return
        star = head
        for step in range(1, spec.gamma + 1):
            nxt = f"{head}p{step}"
            children.setdefault(star, []).append(nxt)
            star = nxt
        for j in range(1, spec.delta + 1):
            child = f"{star}.{j}"
            children.setdefault(star, []).append(child)
            grow(child, levels_left - 1)

    grow("s", spec.star_levels)
    return Tree("s", children)


# -- canonical form ----------------------------------------------------


def canonical_code(tree: Tree) -> str:
    """Canonical encoding of the rooted tree shape.

    Two trees get equal codes iff they are isomorphic as rooted unlabeled
    trees (child codes are sorted, so the code ignores labels and child
    order).
    """

    def code(v: str) -> str:
        return "(" + "".join(sorted(code(c) for c in tree.children_of(v))) + ")"

    return code(tree.root)
