"""Graphs, cotrees, text formats and cotree generators.

Vertices are always the integers ``0..n-1``.  A :class:`Cotree` is stored as
an arena of nodes numbered in preorder, children sorted by their smallest
leaf id, so two equal cographs always print to the same string.
"""

from __future__ import annotations

import itertools
import random
import sys
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

SERIES = "S"
PARALLEL = "P"


class ParseError(ValueError):
    """Malformed edge-list or cotree text."""


class NotCographError(ValueError):
    """Raised by :func:`build_cotree`; ``witness`` induces a path a-b-c-d."""

    def __init__(self, witness: tuple[int, int, int, int]):
        self.witness = witness
        super().__init__("not a cograph, induced P4: %s" % " ".join(map(str, witness)))


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on ``0..n-1``."""

    n: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency has %d rows, expected %d" % (len(self.adjacency), self.n))
        for u, nbrs in enumerate(self.adjacency):
            if u in nbrs:
                raise ValueError("self-loop at vertex %d" % u)
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise ValueError("vertex %d out of range" % v)
                if u not in self.adjacency[v]:
                    raise ValueError("asymmetric adjacency %d-%d" % (u, v))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adj))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def neighbors(self, x: int) -> list[int]:
        return sorted(self.adjacency[x])

    def open_neighborhood(self, x: int) -> frozenset[int]:
        return self.adjacency[x]

    def closed_neighborhood(self, x: int) -> frozenset[int]:
        return self.adjacency[x] | {x}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    def complement(self) -> Graph:
        everyone = frozenset(range(self.n))
        return Graph(self.n, tuple(everyone - a - {u} for u, a in enumerate(self.adjacency)))

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        """Subgraph on ``vertices``, relabelled ``0..k-1`` in increasing order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return Graph(len(keep), tuple(
            frozenset(index[w] for w in self.adjacency[v] if w in index) for v in keep))


# ---------------------------------------------------------------------------
# edge-list text format


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` lines are comments.

    Duplicate edges are merged.  Errors name the offending (1-based) line.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise ParseError("empty edge list")
    lineno, header = rows[0]
    n, m = _ints(header, lineno, 2)
    if n < 0 or m < 0:
        raise ParseError("negative count at line %d" % lineno)
    if len(rows) - 1 != m:
        raise ParseError("header announces %d edges, found %d lines" % (m, len(rows) - 1))
    edges = []
    for lineno, line in rows[1:]:
        u, v = _ints(line, lineno, 2)
        for w in (u, v):
            if not 0 <= w < n:
                raise ParseError("vertex %d out of range at line %d" % (w, lineno))
        if u == v:
            raise ParseError("self-loop at line %d" % lineno)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def _ints(line: str, lineno: int, count: int) -> list[int]:
    tokens = line.split()
    if len(tokens) != count:
        raise ParseError("expected %d integers at line %d" % (count, lineno))
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError("malformed token at line %d" % lineno) from None


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join(["%d %d" % (g.n, len(edges))] + ["%d %d" % e for e in edges]) + "\n"


# ---------------------------------------------------------------------------
# cotrees

@dataclass(frozen=True, eq=False)
class Cotree:
    """Canonical cotree stored as a preorder arena.

    ``labels[u]`` is ``"S"``, ``"P"`` or ``None`` for a leaf, ``vertex[u]`` the
    vertex id of a leaf (``-1`` for internal nodes).  Node 0 is the root.
    """

    labels: tuple[str | None, ...]
    children: tuple[tuple[int, ...], ...]
    vertex: tuple[int, ...]
    root: int = 0

    # -- construction ------------------------------------------------------

    @classmethod
    def from_nested(cls, tree) -> Cotree:
        """Build from nested ``(label, [children])`` / ``int`` form, canonicalising."""
        tree = _canonical_nested(tree)
        labels: list[str | None] = []
        children: list[tuple[int, ...]] = []
        vertex: list[int] = []

        def visit(node) -> int:
            idx = len(labels)
            labels.append(None)
            children.append(())
            vertex.append(-1)
            if isinstance(node, int):
                vertex[idx] = node
            else:
                labels[idx] = node[0]
                children[idx] = tuple(visit(c) for c in node[1])
            return idx

        _with_recursion(lambda: visit(tree), _nested_size(tree))
        return cls(tuple(labels), tuple(children), tuple(vertex), 0)

    def to_nested(self, u: int | None = None):
        u = self.root if u is None else u
        if self.labels[u] is None:
            return self.vertex[u]
        return (self.labels[u], [self.to_nested(c) for c in self.children[u]])

    # -- basic structure ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cotree):
            return NotImplemented
        return (self.labels, self.children, self.vertex, self.root) == (
            other.labels, other.children, other.vertex, other.root)

    def __hash__(self) -> int:
        return hash((self.labels, self.children, self.vertex))

    def __str__(self) -> str:
        return format_cotree(self)

    @property
    def n(self) -> int:
        """Number of leaves (= graph vertices)."""
        return len(self.leaf_order)

    def is_leaf(self, u: int) -> bool:
        return self.labels[u] is None

    @cached_property
    def parent(self) -> tuple[int, ...]:
        par = [-1] * len(self.labels)
        for u, cs in enumerate(self.children):
            for c in cs:
                par[c] = u
        return tuple(par)

    @cached_property
    def depth(self) -> tuple[int, ...]:
        dep = [0] * len(self.labels)
        for u in self.preorder:
            for c in self.children[u]:
                dep[c] = dep[u] + 1
        return tuple(dep)

    @property
    def height(self) -> int:
        return max(self.depth[u] for u in range(len(self.labels)) if self.labels[u] is None)

    @cached_property
    def preorder(self) -> tuple[int, ...]:
        out, stack = [], [self.root]
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(reversed(self.children[u]))
        return tuple(out)

    @cached_property
    def leaf_order(self) -> tuple[int, ...]:
        """Vertex ids in left-to-right leaf order."""
        return tuple(self.vertex[u] for u in self.preorder if self.labels[u] is None)

    @cached_property
    def span(self) -> tuple[tuple[int, int], ...]:
        """``span[u] = (start, end)``: the leaves of ``T_u`` are ``leaf_order[start:end]``."""
        start = [0] * len(self.labels)
        end = [0] * len(self.labels)
        pos = 0
        for u in self.preorder:
            start[u] = pos
            if self.labels[u] is None:
                pos += 1
        for u in reversed(self.preorder):
            end[u] = start[u] + 1 if self.labels[u] is None else end[self.children[u][-1]]
        return tuple(zip(start, end))

    @cached_property
    def leaf_node(self) -> dict[int, int]:
        return {self.vertex[u]: u for u in range(len(self.labels)) if self.labels[u] is None}

    def leaves(self, u: int) -> tuple[int, ...]:
        s, e = self.span[u]
        return self.leaf_order[s:e]

    def min_leaf(self, u: int) -> int:
        return min(self.leaves(u))

    def subtree(self, u: int) -> Cotree:
        """``T_u`` as a standalone cotree, leaves relabelled ``0..k-1`` by increasing id."""
        index = {v: i for i, v in enumerate(sorted(self.leaves(u)))}

        def relabel(node):
            if isinstance(node, int):
                return index[node]
            return (node[0], [relabel(c) for c in node[1]])

        return Cotree.from_nested(relabel(self.to_nested(u)))

    def closed_neighborhood(self, x: int) -> set[int]:
        """``N[x]`` read off the tree: siblings' leaves under every series ancestor."""
        out = {x}
        u = self.leaf_node[x]
        par = self.parent
        while par[u] != -1:
            z = par[u]
            if self.labels[z] == SERIES:
                s, e = self.span[z]
                ms, me = self.span[u]
                out.update(self.leaf_order[s:ms])
                out.update(self.leaf_order[me:e])
            u = z
        return out

    def edge_count(self) -> int:
        m = 0
        for u, cs in enumerate(self.children):
            if self.labels[u] == SERIES:
                sizes = [self.span[c][1] - self.span[c][0] for c in cs]
                total = sum(sizes)
                m += (total * total - sum(s * s for s in sizes)) // 2
        return m

    def validate(self) -> None:
        """Raise ``ValueError`` unless every cotree invariant holds."""
        seen = set()
        for u in self.preorder:
            lab = self.labels[u]
            if lab is None:
                if self.children[u]:
                    raise ValueError("leaf %d has children" % u)
                seen.add(self.vertex[u])
                continue
            if lab not in (SERIES, PARALLEL):
                raise ValueError("bad label %r" % lab)
            if len(self.children[u]) < 2:
                raise ValueError("internal node %d has fewer than two children" % u)
            for c in self.children[u]:
                if self.labels[c] == lab:
                    raise ValueError("node %d and child %d share label %s" % (u, c, lab))
            keys = [self.min_leaf(c) for c in self.children[u]]
            if keys != sorted(keys):
                raise ValueError("children of node %d are not in canonical order" % u)
        if len(self.preorder) != len(self.labels):
            raise ValueError("arena contains unreachable nodes")
        if seen != set(range(len(seen))):
            raise ValueError("leaf ids are not 0..n-1")


def _nested_size(tree) -> int:
    if isinstance(tree, int):
        return 1
    return 1 + sum(_nested_size(c) for c in tree[1])


def _with_recursion(fn, depth: int):
    limit = sys.getrecursionlimit()
    if depth + 100 > limit:
        sys.setrecursionlimit(depth + 1000)
    return fn()


def _canonical_nested(tree):
    """Merge same-label parent/child pairs, drop unary nodes, sort children."""

    def canon(node):
        if isinstance(node, int):
            return node, node
        label, kids = node
        if label not in (SERIES, PARALLEL):
            raise ValueError("bad label %r" % (label,))
        flat = []
        for child in kids:
            c, key = canon(child)
            if not isinstance(c, int) and c[0] == label:
                flat.extend(c[1])
            else:
                flat.append(c)
        if not flat:
            raise ValueError("internal node without children")
        if len(flat) == 1:
            only = flat[0]
            return only, _min_leaf_nested(only)
        flat.sort(key=_min_leaf_nested)
        return (label, flat), _min_leaf_nested(flat[0])

    return _with_recursion(lambda: canon(tree)[0], _nested_size(tree))


def _min_leaf_nested(node) -> int:
    while not isinstance(node, int):
        node = node[1][0]
    return node


def format_cotree(t: Cotree) -> str:
    parts: list[str] = []
    stack: list = [t.root]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
            continue
        if t.labels[item] is None:
            parts.append(str(t.vertex[item]))
            continue
        parts.append(t.labels[item] + "(")
        stack.append(")")
        for i, c in enumerate(reversed(t.children[item])):
            stack.append(c)
            if i < len(t.children[item]) - 1:
                stack.append(",")
    return "".join(parts)


def parse_cotree(text: str) -> Cotree:
    """Parse ``S(P(0,1),P(2,3))``-style text (whitespace ignored) and canonicalise."""
    s = "".join(text.split())
    pos = 0

    def fail(msg):
        raise ParseError("%s at offset %d" % (msg, pos))

    stack: list[tuple[str, list]] = []
    result = None
    while pos < len(s):
        ch = s[pos]
        if ch in "SP":
            if pos + 1 >= len(s) or s[pos + 1] != "(":
                fail("expected '(' after label")
            stack.append((ch, []))
            pos += 2
            continue
        if ch.isdigit():
            end = pos
            while end < len(s) and s[end].isdigit():
                end += 1
            node = int(s[pos:end])
            pos = end
        elif ch == ")":
            if not stack or not stack[-1][1]:
                fail("unexpected ')'")
            node = stack.pop()
            pos += 1
        else:
            fail("unexpected character %r" % ch)
        if stack:
            stack[-1][1].append(node)
            if pos < len(s) and s[pos] == ",":
                pos += 1
                if pos >= len(s) or s[pos] == ")":
                    fail("dangling ','")
            elif pos < len(s) and s[pos] != ")":
                fail("expected ',' or ')'")
        else:
            if result is not None:
                fail("trailing input")
            result = node
    if stack or result is None:
        raise ParseError("unterminated cotree")
    t = Cotree.from_nested(result)
    leaves = sorted(t.leaf_order)
    if leaves != list(range(len(leaves))):
        raise ParseError("leaf ids must be exactly 0..n-1 without repetition")
    return t


# ---------------------------------------------------------------------------
# graph <-> cotree


def cotree_to_graph(t: Cotree) -> Graph:
    """Cograph of ``t``: x ~ y iff their least common ancestor is a series node."""
    adj: list[set[int]] = [set() for _ in range(t.n)]
    for u in range(len(t)):
        if t.labels[u] != SERIES:
            continue
        groups = [t.leaves(c) for c in t.children[u]]
        everyone = set(t.leaves(u))
        for grp in groups:
            rest = everyone.difference(grp)
            for x in grp:
                adj[x] |= rest
    return Graph(t.n, tuple(frozenset(a) for a in adj))


def build_cotree(g: Graph) -> Cotree:
    """Recognise a cograph by splitting into components / co-components.

    Raises :class:`NotCographError` carrying an induced P4 when ``g`` has one.
    """
    if g.n == 0:
        raise ValueError("empty graph has no cotree")

    def split(vs: frozenset[int], complement: bool) -> list[frozenset[int]]:
        todo = set(vs)
        parts = []
        while todo:
            start = todo.pop()
            comp = {start}
            frontier = [start]
            while frontier:
                x = frontier.pop()
                nbrs = (todo - g.adjacency[x]) if complement else (todo & g.adjacency[x])
                todo -= nbrs
                comp |= nbrs
                frontier.extend(nbrs)
            parts.append(frozenset(comp))
        return parts

    def rec(vs: frozenset[int]):
        if len(vs) == 1:
            return next(iter(vs))
        comps = split(vs, complement=False)
        if len(comps) > 1:
            return (PARALLEL, [rec(c) for c in comps])
        cocomps = split(vs, complement=True)
        if len(cocomps) > 1:
            return (SERIES, [rec(c) for c in cocomps])
        raise NotCographError(_find_p4(g, vs))

    nested = _with_recursion(lambda: rec(frozenset(range(g.n))), g.n)
    return Cotree.from_nested(nested)


def _find_p4(g: Graph, vs: Iterable[int]) -> tuple[int, int, int, int]:
    for quad in itertools.combinations(sorted(vs), 4):
        for a, b, c, d in itertools.permutations(quad):
            if a > d:
                continue
            if (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
                    and not g.has_edge(a, c) and not g.has_edge(b, d) and not g.has_edge(a, d)):
                return (a, b, c, d)
    raise AssertionError("component and co-component connected but no P4 found")


def is_induced_p4(g: Graph, w: Sequence[int]) -> bool:
    a, b, c, d = w
    return (len(set(w)) == 4 and g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
            and not g.has_edge(a, c) and not g.has_edge(b, d) and not g.has_edge(a, d))


# ---------------------------------------------------------------------------
# generators


def _flip(label: str) -> str:
    return PARALLEL if label == SERIES else SERIES


def _check_label(label: str) -> str:
    if label not in (SERIES, PARALLEL):
        raise ValueError("root label must be 'S' or 'P', got %r" % (label,))
    return label


def gen_binary_cotree(h: int, root_label: str = SERIES) -> Cotree:
    """Complete binary cotree of height ``h`` with alternating labels.

    Leaves are ``0..2**h - 1`` from left to right; ``h = 0`` is a single leaf.
    """
    if h < 0:
        raise ValueError("height must be non-negative")
    _check_label(root_label)
    counter = itertools.count()

    def build(depth, label):
        if depth == h:
            return next(counter)
        return (label, [build(depth + 1, _flip(label)), build(depth + 1, _flip(label))])

    return Cotree.from_nested(build(0, root_label))


def gen_double_factorial(h: int, root_label: str = SERIES) -> Cotree:
    """Double factorial tree of height ``h``: the root has ``2h+1`` copies of height ``h-1``."""
    if h < 0:
        raise ValueError("height must be non-negative")
    _check_label(root_label)
    counter = itertools.count()

    def build(height, label):
        if height == 0:
            return next(counter)
        return (label, [build(height - 1, _flip(label)) for _ in range(2 * height + 1)])

    return Cotree.from_nested(build(h, root_label))


def gen_random_cotree(n: int, seed: int) -> Cotree:
    """Random canonical cotree on ``n`` leaves, a pure function of ``(n, seed)``.

    Repeatedly joins 2-4 random pieces under a random label, then merges
    same-label parent/child pairs.  Leaf ids are shuffled.
    """
    if n < 1:
        raise ValueError("need at least one leaf")
    rng = random.Random(seed)
    pieces: list = list(range(n))
    rng.shuffle(pieces)
    while len(pieces) > 1:
        k = min(len(pieces), rng.choice((2, 2, 3, 4)))
        picked = [pieces.pop(rng.randrange(len(pieces))) for _ in range(k)]
        pieces.append((rng.choice((SERIES, PARALLEL)), picked))
    return Cotree.from_nested(pieces[0])
