"""Factorial rank of rooted trees.

The factorial rank of a node is the largest ``h`` such that the double
factorial tree of height ``h`` (root with ``2h+1`` children, each of height
``h-1``) can be obtained from its subtree by edge contractions alone.

:func:`factorial_rank` computes it for every node in one bottom-up pass;
:func:`contains_double_factorial_minor` is an exhaustive search over
contraction sequences, only meant to certify the fast path on small trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence


class GuardError(RuntimeError):
    """An exhaustive search was asked to run beyond its size guard."""


@dataclass(frozen=True)
class RootedTree:
    """Unlabelled rooted tree as a children table (node ids are indices)."""

    children: tuple[tuple[int, ...], ...]
    root: int = 0

    @classmethod
    def from_nested(cls, code) -> RootedTree:
        """Build from a nested-tuple code: a node is the tuple of its children."""
        children: list[tuple[int, ...]] = []

        def visit(node) -> int:
            idx = len(children)
            children.append(())
            children[idx] = tuple(visit(c) for c in node)
            return idx

        visit(code)
        return cls(tuple(children), 0)

    @classmethod
    def path(cls, nodes: int) -> RootedTree:
        return cls(tuple((i + 1,) for i in range(nodes - 1)) + ((),))

    @classmethod
    def star(cls, leaves: int) -> RootedTree:
        return cls((tuple(range(1, leaves + 1)),) + ((),) * leaves)


@dataclass(frozen=True)
class RankAnnotation:
    rank: tuple[int, ...]
    minimal: tuple[bool, ...]
    antichains: tuple[tuple[int, ...], ...]
    root: int = 0

    def antichain_count(self, u: int, r: int) -> int:
        """Max number of pairwise incomparable nodes of rank >= ``r`` below ``u`` (inclusive)."""
        row = self.antichains[u]
        return row[r] if r < len(row) else 0

    @property
    def root_rank(self) -> int:
        return self.rank[self.root]


def _postorder(children: Sequence[Sequence[int]], root: int) -> list[int]:
    order, stack = [], [root]
    while stack:
        u = stack.pop()
        order.append(u)
        stack.extend(children[u])
    order.reverse()
    return order


def factorial_rank(tree) -> RankAnnotation:
    """Annotate every node of ``tree`` with its factorial rank.

    ``tree`` is anything with ``children`` and ``root`` attributes (a
    :class:`RootedTree` or a cotree; labels are ignored).

    A node reaches rank ``h`` either through a child that already has it, or
    by collecting ``2h+1`` pairwise incomparable strict descendants of rank
    ``h-1``: everything outside their subtrees contracts into the root.  The
    antichain sizes are summed over children, so the pass is
    ``O(nodes * rank)``.
    """
    children = tree.children
    size = len(children)
    rank = [0] * size
    anti: list[tuple[int, ...]] = [()] * size
    for u in _postorder(children, tree.root):
        kids = children[u]
        if not kids:
            anti[u] = (1,)
            continue
        best = max(rank[c] for c in kids)
        h = 1
        while sum(_count(anti[c], h - 1) for c in kids) >= 2 * h + 1:
            best = max(best, h)
            h += 1
        rank[u] = best
        anti[u] = tuple(max(sum(_count(anti[c], r) for c in kids), 1) for r in range(best + 1))
    minimal = tuple(all(rank[c] <= rank[u] - 1 for c in children[u]) for u in range(size))
    return RankAnnotation(tuple(rank), minimal, tuple(anti), tree.root)


def _count(row: tuple[int, ...], r: int) -> int:
    return row[r] if r < len(row) else 0


def is_minimally_of_rank(ann: RankAnnotation, u: int) -> bool:
    """True iff every child of ``u`` has rank at most ``rank(u) - 1``; leaves qualify."""
    return ann.minimal[u]


# ---------------------------------------------------------------------------
# exhaustive contraction-minor oracle
#
# Trees are handled as canonical nested tuples: a node is the sorted tuple of
# its children's codes, so isomorphic trees have equal codes.


def tree_code(tree, u: int | None = None):
    u = tree.root if u is None else u
    out = {}
    for v in _postorder(tree.children, u):
        out[v] = tuple(sorted(out[c] for c in tree.children[v]))
    return out[u]


@lru_cache(maxsize=None)
def double_factorial_code(h: int):
    if h == 0:
        return ()
    return tuple([double_factorial_code(h - 1)] * (2 * h + 1))


@lru_cache(maxsize=None)
def code_size(code) -> int:
    return 1 + sum(code_size(c) for c in code)


@lru_cache(maxsize=None)
def _single_contractions(code) -> frozenset:
    """Every tree obtained from ``code`` by contracting exactly one edge."""
    out = set()
    for i, child in enumerate(code):
        rest = code[:i] + code[i + 1:]
        # contract the root-child edge: grandchildren move up
        out.add(tuple(sorted(rest + child)))
        for sub in _single_contractions(child):
            out.add(tuple(sorted(rest + (sub,))))
    return frozenset(out)


def contains_double_factorial_minor(tree, h: int, max_nodes: int | None = 12) -> bool:
    """Exhaustively decide whether edge contractions turn ``tree`` into the height-``h`` tree.

    Raises :class:`GuardError` when the tree has more than ``max_nodes``
    nodes; pass ``max_nodes=None`` to lift the guard.
    """
    if h < 0:
        raise ValueError("h must be non-negative")
    code = tree if isinstance(tree, tuple) else tree_code(tree)
    size = code_size(code)
    if max_nodes is not None and size > max_nodes:
        raise GuardError("tree has %d nodes, guard is %d" % (size, max_nodes))
    target = double_factorial_code(h)
    target_size = code_size(target)
    seen = {code}
    frontier = [code]
    while frontier:
        cur = frontier.pop()
        if cur == target:
            return True
        if code_size(cur) <= target_size:
            continue
        for nxt in _single_contractions(cur):
            if nxt not in seen and code_size(nxt) >= target_size:
                seen.add(nxt)
                frontier.append(nxt)
    return False


def oracle_rank(tree, max_nodes: int | None = 12) -> int:
    """Largest ``h`` accepted by :func:`contains_double_factorial_minor`."""
    h = 0
    while contains_double_factorial_minor(tree, h + 1, max_nodes):
        h += 1
    return h


def all_rooted_trees(nodes: int) -> Iterator[tuple]:
    """Every unlabelled rooted tree with exactly ``nodes`` nodes, as canonical codes."""
    yield from _trees_of_size(nodes)


@lru_cache(maxsize=None)
def _trees_of_size(nodes: int) -> tuple:
    if nodes == 1:
        return ((),)
    return tuple(tuple(sorted(forest)) for forest in _forests(nodes - 1, nodes - 1))


@lru_cache(maxsize=None)
def _forests(total: int, max_part: int) -> tuple:
    """Multisets of trees with ``total`` nodes, each tree of size <= ``max_part``.

    Trees are chosen in non-increasing (size, index) order to avoid repeats.
    """
    if total == 0:
        return ((),)
    out = []
    for size in range(min(total, max_part), 0, -1):
        trees = _trees_of_size(size)
        for idx, first in enumerate(trees):
            for rest in _forests_bounded(total - size, size, idx):
                out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _forests_bounded(total: int, max_size: int, max_idx: int) -> tuple:
    """Forests whose trees all come at or after (max_size, max_idx) in the ordering."""
    if total == 0:
        return ((),)
    out = []
    for size in range(min(total, max_size), 0, -1):
        trees = _trees_of_size(size)
        top = max_idx if size == max_size else len(trees) - 1
        for idx in range(top + 1):
            for rest in _forests_bounded(total - size, size, idx):
                out.append((trees[idx],) + rest)
    return tuple(out)
