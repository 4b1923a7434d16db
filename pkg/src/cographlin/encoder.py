"""Closed line-models of cographs with O(factorial rank) orders.

Every node ``u`` of a cotree of factorial rank ``r`` gets a closed model of
``G_u`` with at most ``2r + 3`` orders; ``2r + 2`` if ``u`` is minimal of
rank ``r >= 1``; a single order at rank 0.  The construction recurses on the
cotree:

* rank 0 nodes are handled directly (:func:`encode_rank0`);
* minimal series nodes of rank 1 use a fixed two-order layout
  (:func:`encode_fig3`);
* other minimal series nodes concatenate their children's models and add
  one order for the leftward neighbours (:func:`encode_step2`);
* minimal parallel nodes append their children's models;
* non-minimal nodes are cut into blocks hanging off the rank-``r`` part of
  the subtree and use ``2r + 3`` orders (:func:`encode_step1`).

Models produced by the last two routines are *anchored*: every vertex has an
order in which its interval runs to the last position, which is what lets a
series parent extend it over the blocks to its right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .graphs import PARALLEL, SERIES, Cotree
from .models import (
    CLOSED,
    Interval,
    LineModel,
    ModelError,
    concat_disjoint_union,
    pad_orders,
    restrict_model,
)
from .rank import RankAnnotation, factorial_rank


class EncodingError(RuntimeError):
    """An internal bound of the construction was violated."""


def encode(t: Cotree, ann: RankAnnotation | None = None) -> LineModel:
    """Closed line-model of the cograph of ``t``."""
    ann = factorial_rank(t) if ann is None else ann
    return _Encoder(t, ann).encode(t.root)


def order_bound(ann: RankAnnotation, u: int) -> int:
    """Number of orders the construction is allowed to use at node ``u``."""
    r = ann.rank[u]
    if r == 0:
        return 1
    return 2 * r + 2 if ann.minimal[u] else 2 * r + 3


class _Encoder:
    def __init__(self, t: Cotree, ann: RankAnnotation):
        self.t = t
        self.ann = ann

    def encode(self, u: int) -> LineModel:
        t, ann = self.t, self.ann
        r = ann.rank[u]
        if r == 0:
            m = encode_rank0(t, u)
        elif ann.minimal[u]:
            if t.labels[u] == SERIES:
                if r == 1:
                    m = encode_fig3(t, u)
                else:
                    m = encode_step2(t, u, ann, self.encode)
            else:
                m = concat_disjoint_union([self.encode(c) for c in t.children[u]])
        else:
            m = encode_step1(t, u, ann, self.encode)
        if m.p > order_bound(ann, u):
            raise EncodingError("node %d: %d orders exceed bound %d" % (u, m.p, order_bound(ann, u)))
        return m


# ---------------------------------------------------------------------------
# base cases


def encode_rank0(t: Cotree, u: int) -> LineModel:
    """One-order model of a leaf or of an internal node with two leaf children."""
    if t.is_leaf(u):
        v = t.vertex[u]
        return LineModel(CLOSED, ((v,),), {v: (Interval(0, 1),)}, {v: 0})
    kids = t.children[u]
    if len(kids) != 2 or not all(t.is_leaf(c) for c in kids):
        raise ValueError("node %d does not have factorial rank 0" % u)
    a, b = (t.vertex[c] for c in kids)
    if t.labels[u] == SERIES:
        whole = (Interval(0, 2),)
        return LineModel(CLOSED, ((a, b),), {a: whole, b: whole}, {a: 0, b: 0})
    return LineModel(CLOSED, ((a, b),), {a: (Interval(0, 1),), b: (Interval(1, 2),)}, {b: 0})


def fig3_model(pairs: Sequence[tuple[int, int]]) -> LineModel:
    """Two-order model of the series composition of the non-edges ``a_i b_i``.

    Both orders are ``a1 b1 a2 b2 ...``.  In the first order ``a_i`` sees the
    prefix ending at itself and ``b_i`` the suffix starting at itself; in the
    second, ``a_i`` sees everything after ``b_i`` and ``b_i`` everything
    before ``a_i``.  Empty intervals sit just after the vertex's own pair.
    """
    order = tuple(v for pair in pairs for v in pair)
    n = len(order)
    intervals = {}
    anchors = {}
    for i, (a, b) in enumerate(pairs):
        pa, pb = 2 * i, 2 * i + 1
        after = pb + 1
        intervals[a] = (Interval(0, pa + 1), Interval(after, n))
        intervals[b] = (Interval(pb, n), Interval(0, pa) if pa > 0 else Interval(after, after))
        anchors[a] = 1
        anchors[b] = 0
    return LineModel(CLOSED, (order, order), intervals, anchors)


def encode_fig3(t: Cotree, u: int) -> LineModel:
    """Two-order model of a series node whose children all have rank 0.

    Children that are single leaves are paired with a placeholder vertex,
    laid out as above, and the placeholders are then restricted away.
    """
    if t.labels[u] != SERIES:
        raise ValueError("node %d is not a series node" % u)
    pairs = []
    placeholder = -1
    real = []
    for c in t.children[u]:
        if t.is_leaf(c):
            pairs.append((t.vertex[c], placeholder))
            real.append(t.vertex[c])
            placeholder -= 1
            continue
        kids = t.children[c]
        if t.labels[c] != PARALLEL or len(kids) != 2 or not all(t.is_leaf(k) for k in kids):
            raise ValueError("child %d of node %d is not a leaf or a parallel leaf pair" % (c, u))
        pair = (t.vertex[kids[0]], t.vertex[kids[1]])
        pairs.append(pair)
        real.extend(pair)
    m = fig3_model(pairs)
    if placeholder == -1:
        return m
    return restrict_model(m, real)


# ---------------------------------------------------------------------------
# step 1: non-minimal nodes


@dataclass(frozen=True)
class StepOneContext:
    """Decomposition of ``T_u`` used by :func:`encode_step1`.

    ``tprime`` holds the nodes of rank ``r`` (preorder), ``u_min`` the lowest
    ones, ``u_low`` the lower-rank children hanging off ``tprime`` minus
    ``u_min``.  ``paths[i]`` is a monotonic path (bottom first) ending at
    ``u_min[i]``; ``block_orders[j]`` is the block sequence of order ``j``.
    """

    u: int
    r: int
    tprime: tuple[int, ...]
    u_min: tuple[int, ...]
    u_low: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]
    path_of: dict[int, int]
    path_of_low: dict[int, int]
    local_orders: tuple[dict[int, tuple[int, ...]], ...]
    block_orders: tuple[tuple[int, ...], ...]

    @property
    def l(self) -> int:
        return len(self.u_min)


def build_step1_context(t: Cotree, u: int, ann: RankAnnotation) -> StepOneContext:
    r = ann.rank[u]
    if r < 1 or ann.minimal[u]:
        raise ValueError("node %d is not a non-minimal node of positive rank" % u)
    in_tprime = set()
    tprime = []
    stack = [u]
    while stack:
        z = stack.pop()
        in_tprime.add(z)
        tprime.append(z)
        stack.extend(c for c in reversed(t.children[z]) if ann.rank[c] == r)
    u_min = tuple(z for z in tprime if not any(c in in_tprime for c in t.children[z]))
    K = 2 * r + 2
    if len(u_min) > K:
        raise EncodingError("node %d: %d minimal rank-%d nodes exceed %d" % (u, len(u_min), r, K))
    upper = [z for z in tprime if z not in set(u_min)]
    u_low = tuple(c for z in upper for c in t.children[z] if c not in in_tprime)

    par = t.parent
    path_of: dict[int, int] = {}
    paths = []
    toward: list[dict[int, int]] = []
    for i, ui in enumerate(u_min):
        path = []
        z = ui
        while z not in path_of:
            path_of[z] = i
            path.append(z)
            if z == u:
                break
            z = par[z]
        paths.append(tuple(path))
        # child of each strict ancestor (up to u) lying toward u_i
        steps = {}
        z = ui
        while z != u:
            steps[par[z]] = z
            z = par[z]
        toward.append(steps)
    path_of_low = {w: path_of[par[w]] for w in u_low}

    l = len(u_min)
    local: list[dict[int, tuple[int, ...]]] = []
    for j in range(K + 1):
        orders = {}
        for z in upper:
            kids = t.children[z]
            ref = path_of[z] if j == K else j
            if ref < l and z in toward[ref]:
                c = toward[ref][z]
                rest = tuple(k for k in kids if k != c)
                orders[z] = (c,) + rest if t.labels[z] == SERIES else rest + (c,)
            else:
                orders[z] = kids
        local.append(orders)

    blocks_set = set(u_min) | set(u_low)
    block_orders = []
    for j in range(K + 1):
        seq = []
        stack = [u]
        while stack:
            z = stack.pop()
            if z in blocks_set:
                seq.append(z)
            else:
                stack.extend(reversed(local[j][z]))
        block_orders.append(tuple(seq))

    return StepOneContext(u, r, tuple(tprime), u_min, u_low, tuple(paths), path_of,
                          path_of_low, tuple(local), tuple(block_orders))


def encode_step1(t: Cotree, u: int, ann: RankAnnotation,
                 encode_child: Callable[[int], LineModel]) -> LineModel:
    """``(2r+3)``-order anchored model of a non-minimal node of rank ``r >= 1``.

    Orders ``0..2r+1`` each take care of the outside neighbourhood of one
    path's blocks and carry the recursive models of all other blocks;
    order ``2r+2`` supplies the leftover order of every minimal block and
    the left-hand siblings under series parents.
    """
    ctx = build_step1_context(t, u, ann)
    r = ctx.r
    K = 2 * r + 2
    N = t.span[u][1] - t.span[u][0]
    par = t.parent
    owner: dict[int, int] = {}
    sub: dict[int, LineModel] = {}
    for i, ui in enumerate(ctx.u_min):
        m = encode_child(ui)
        if m.p > K:
            raise EncodingError("minimal node %d needs %d > %d orders" % (ui, m.p, K))
        sub[ui] = pad_orders(m, K)
        owner[ui] = i
    for w in ctx.u_low:
        m = encode_child(w)
        if m.p > K - 1:
            raise EncodingError("low node %d needs %d > %d orders" % (w, m.p, K - 1))
        sub[w] = pad_orders(m, K - 1)
        owner[w] = ctx.path_of_low[w]
    is_min = set(ctx.u_min)

    orders = []
    columns: dict[int, list[Interval]] = {x: [] for x in t.leaves(u)}
    for j in range(K + 1):
        order: list[int] = []
        block_span: dict[int, tuple[int, int]] = {}
        node_span: dict[int, list[int]] = {}
        # walk the rank-r part; record where every node's leaves land
        stack: list[tuple[int, bool]] = [(u, False)]
        while stack:
            z, done = stack.pop()
            if done:
                node_span[z][1] = len(order)
                continue
            if z in sub:
                start = len(order)
                order.extend(_block_order(sub[z], z in is_min, owner[z], j, K))
                block_span[z] = (start, len(order))
                continue
            node_span[z] = [len(order), 0]
            stack.append((z, True))
            stack.extend((c, False) for c in reversed(ctx.local_orders[j][z]))
        orders.append(tuple(order))

        for b, (start, end) in block_span.items():
            i = owner[b]
            m = sub[b]
            if j == i:
                if b in is_min or t.labels[par[b]] == SERIES:
                    ext = Interval(end, N)
                else:
                    ext = Interval(node_span[par[b]][1], N)
                for x in m.intervals:
                    columns[x].append(ext)
                continue
            if j == K and b not in is_min:
                if t.labels[par[b]] == SERIES:
                    left = Interval(node_span[par[b]][0], start)
                else:
                    left = Interval(N, N)
                for x in m.intervals:
                    columns[x].append(left)
                continue
            src = _source_index(b in is_min, i, j, K)
            for x, ivs in m.intervals.items():
                iv = ivs[src]
                columns[x].append(Interval(iv.lo + start, iv.hi + start))

    intervals = {x: tuple(ivs) for x, ivs in columns.items()}
    anchors = {x: owner[b] for b in sub for x in sub[b].intervals}
    return LineModel(CLOSED, tuple(orders), intervals, anchors)


def _source_index(minimal: bool, i: int, j: int, K: int) -> int:
    """Which order of a block's own model is copied into output order ``j``."""
    if minimal:
        return i if j == K else j
    return j if j < i else j - 1


def _block_order(m: LineModel, minimal: bool, i: int, j: int, K: int) -> tuple[int, ...]:
    if j == i or (j == K and not minimal):
        return m.vertices
    return m.orders[_source_index(minimal, i, j, K)]


# ---------------------------------------------------------------------------
# step 2: minimal series nodes


def encode_step2(t: Cotree, v: int, ann: RankAnnotation,
                 encode_child: Callable[[int], LineModel]) -> LineModel:
    """``(2k+2)``-order anchored model of a minimal series node of rank ``k >= 1``.

    Orders ``0..2k`` concatenate the children's (padded) models; each vertex
    stretches its anchored interval over all later blocks.  The last order
    lists the blocks once more and gives every vertex the earlier blocks.
    A child vertex without an anchor is anchored in one of the padding
    orders, where its empty interval sits at the end of its block.
    """
    if t.labels[v] != SERIES:
        raise ValueError("node %d is not a series node" % v)
    k = ann.rank[v]
    if k < 1 or not ann.minimal[v]:
        raise ValueError("node %d is not minimal of positive rank" % v)
    P = 2 * k + 1
    blocks = []
    for c in t.children[v]:
        m = encode_child(c)
        if m.p > P:
            raise EncodingError("child %d needs %d > %d orders" % (c, m.p, P))
        anchors = dict(m.anchors)
        loose = [x for x in m.intervals if x not in anchors]
        if loose:
            if m.p == P:
                raise EncodingError("child %d has unanchored vertices and no free order" % c)
            for x in loose:
                anchors[x] = m.p
        blocks.append((pad_orders(m, P), anchors))

    N = sum(m.n for m, _ in blocks)
    orders = []
    for j in range(P):
        orders.append(tuple(x for m, _ in blocks for x in m.orders[j]))
    orders.append(tuple(x for m, _ in blocks for x in m.vertices))
    intervals = {}
    anchors_out = {}
    offset = 0
    for m, anchors in blocks:
        for x, ivs in m.intervals.items():
            a = anchors[x]
            row = [Interval(iv.lo + offset, N if j == a else iv.hi + offset)
                   for j, iv in enumerate(ivs)]
            row.append(Interval(0, offset))
            intervals[x] = tuple(row)
            anchors_out[x] = a
        offset += m.n
    return LineModel(CLOSED, tuple(orders), intervals, anchors_out)


__all__ = [
    "EncodingError",
    "StepOneContext",
    "build_step1_context",
    "encode",
    "encode_fig3",
    "encode_rank0",
    "encode_step1",
    "encode_step2",
    "fig3_model",
    "order_bound",
    "pad_orders",
]
