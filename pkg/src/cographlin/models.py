"""Line-models and contiguity models: storage, verification, queries, file I/O.

A line-model keeps ``p`` orders of the vertex set and, for each vertex, one
half-open position range ``[lo, hi)`` per order; the vertex's neighbourhood is
the union of the vertices sitting at those positions.  Empty ranges
(``lo == hi``) are allowed.  Vertex labels may be any distinct integers, which
lets a model describe a subtree of a larger cotree without relabelling; only
:func:`verify_line_model` insists on ``0..n-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

import numpy as np

from .graphs import Graph, ParseError

CLOSED = "closed"
OPEN = "open"


class ModelError(ValueError):
    """A model violates its structural invariants or does not match the graph."""


class Interval(NamedTuple):
    lo: int
    hi: int

    @property
    def empty(self) -> bool:
        return self.lo == self.hi


@dataclass(frozen=True, eq=True)
class LineModel:
    """``p`` vertex orders plus one interval per vertex per order."""

    flavor: str
    orders: tuple[tuple[int, ...], ...]
    intervals: Mapping[int, tuple[Interval, ...]]
    anchors: Mapping[int, int] = field(default_factory=dict)

    @property
    def p(self) -> int:
        return len(self.orders)

    @property
    def n(self) -> int:
        return len(self.intervals)

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.intervals))

    @cached_property
    def positions(self) -> tuple[dict[int, int], ...]:
        return tuple({v: i for i, v in enumerate(order)} for order in self.orders)

    def check(self) -> None:
        """Raise :class:`ModelError` if the model is structurally malformed."""
        if self.flavor not in (CLOSED, OPEN):
            raise ModelError("flavor must be 'closed' or 'open'")
        verts = set(self.intervals)
        n = len(verts)
        for j, order in enumerate(self.orders):
            if len(order) != n or set(order) != verts:
                raise ModelError("order %d is not a permutation of the vertex set" % j)
        for x, ivs in self.intervals.items():
            if len(ivs) != self.p:
                raise ModelError("vertex %d has %d intervals, expected %d" % (x, len(ivs), self.p))
            for iv in ivs:
                if not 0 <= iv.lo <= iv.hi <= n:
                    raise ModelError("vertex %d interval %s out of bounds" % (x, tuple(iv)))
        for x, j in self.anchors.items():
            if x not in verts or not 0 <= j < self.p:
                raise ModelError("bad anchor %d -> %d" % (x, j))
            if self.intervals[x][j].hi != n:
                raise ModelError("anchor of vertex %d does not reach the end of order %d" % (x, j))

    def covered(self, x: int) -> set[int]:
        out: set[int] = set()
        for order, iv in zip(self.orders, self.intervals[x]):
            out.update(order[iv.lo:iv.hi])
        return out

    def relabeled(self) -> LineModel:
        """Same model with vertices renamed ``0..n-1`` in increasing label order."""
        index = {v: i for i, v in enumerate(self.vertices)}
        return LineModel(
            self.flavor,
            tuple(tuple(index[v] for v in order) for order in self.orders),
            {index[x]: ivs for x, ivs in self.intervals.items()},
            {index[x]: j for x, j in self.anchors.items()},
        )

    # numpy views for bulk queries; only meaningful for labels 0..n-1
    @cached_property
    def _order_array(self) -> np.ndarray:
        return np.array(self.orders, dtype=np.int64).reshape(self.p, self.n)

    @cached_property
    def _bounds_array(self) -> np.ndarray:
        arr = np.zeros((self.n, self.p, 2), dtype=np.int64)
        for x, ivs in self.intervals.items():
            arr[x] = ivs
        return arr


@dataclass(frozen=True)
class ContiguityModel:
    """One vertex order; each vertex owns a list of intervals of it."""

    order: tuple[int, ...]
    intervals: Mapping[int, tuple[Interval, ...]]

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def k(self) -> int:
        return max((len(ivs) for ivs in self.intervals.values()), default=0)

    def check(self) -> None:
        n = len(self.order)
        if set(self.order) != set(self.intervals) or len(set(self.order)) != n:
            raise ModelError("order is not a permutation of the vertex set")
        for x, ivs in self.intervals.items():
            for iv in ivs:
                if not 0 <= iv.lo <= iv.hi <= n:
                    raise ModelError("vertex %d interval %s out of bounds" % (x, tuple(iv)))

    def covered(self, x: int) -> set[int]:
        out: set[int] = set()
        for iv in self.intervals[x]:
            out.update(self.order[iv.lo:iv.hi])
        return out


@dataclass
class VerificationReport:
    ok: bool
    violations: list[tuple[int, frozenset[int], frozenset[int]]]

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        lines = ["violations: %d" % len(self.violations)]
        for x, missing, extra in self.violations:
            lines.append("vertex %d missing {%s} extra {%s}" % (
                x, ",".join(map(str, sorted(missing))), ",".join(map(str, sorted(extra)))))
        return "\n".join(lines)


def _neighborhood(g: Graph, x: int, closed: bool) -> frozenset[int]:
    return g.closed_neighborhood(x) if closed else g.open_neighborhood(x)


def _report(g: Graph, covered, closed: bool, vertices: Iterable[int] | None = None):
    violations = []
    for x in (range(g.n) if vertices is None else vertices):
        want = _neighborhood(g, x, closed)
        got = covered(x)
        if got != want:
            violations.append((x, frozenset(want - got), frozenset(got - want)))
    return VerificationReport(not violations, violations)


def verify_line_model(g: Graph, m: LineModel, vertices: Iterable[int] | None = None) -> VerificationReport:
    """Check that every vertex's intervals cover exactly its neighbourhood.

    The closed or open neighbourhood is used according to ``m.flavor``.
    Structural problems (including an anchor that does not reach the last
    position) raise :class:`ModelError`.  ``vertices`` restricts the check to
    a sample.
    """
    m.check()
    if m.vertices != tuple(range(g.n)):
        raise ModelError("model has %d vertices, graph has %d" % (m.n, g.n))
    return _report(g, m.covered, m.flavor == CLOSED, vertices)


def verify_contiguity_model(g: Graph, m: ContiguityModel, closed: bool = True) -> VerificationReport:
    m.check()
    if tuple(sorted(m.order)) != tuple(range(g.n)):
        raise ModelError("model has %d vertices, graph has %d" % (m.n, g.n))
    return _report(g, m.covered, closed)


def query_closed_neighborhood(m: LineModel, x: int) -> set[int]:
    """Union of ``x``'s intervals; equals ``N[x]`` for a valid closed model."""
    if m.flavor != CLOSED:
        raise ModelError("closed-neighbourhood query on an open model")
    if x not in m.intervals:
        raise KeyError("vertex %d not in model" % x)
    return m.covered(x)


def query_mask(m: LineModel, x: int) -> np.ndarray:
    """Boolean membership vector of ``x``'s intervals (labels must be ``0..n-1``)."""
    mask = np.zeros(m.n, dtype=bool)
    orders = m._order_array
    for j, (lo, hi) in enumerate(m._bounds_array[x]):
        mask[orders[j, lo:hi]] = True
    return mask


# ---------------------------------------------------------------------------
# conversions and combinators


def closed_to_open(m: LineModel) -> LineModel:
    """Split each order into a left copy and a right copy around each vertex.

    ``x`` keeps the part of its interval strictly before itself in the left
    copy and the part strictly after itself in the right copy; if ``x`` is
    not inside its own interval the whole interval goes left.
    """
    if m.flavor != CLOSED:
        raise ModelError("expected a closed model")
    m.check()
    orders = []
    for order in m.orders:
        orders += [order, order]
    intervals = {}
    anchors = {}
    for x, ivs in m.intervals.items():
        out = []
        for j, iv in enumerate(ivs):
            q = m.positions[j][x]
            if iv.lo <= q < iv.hi:
                out += [Interval(iv.lo, q), Interval(q + 1, iv.hi)]
                inside = True
            else:
                out += [iv, Interval(iv.hi, iv.hi)]
                inside = False
            if m.anchors.get(x) == j:
                anchors[x] = 2 * j + 1 if inside else 2 * j
        intervals[x] = tuple(out)
    return LineModel(OPEN, tuple(orders), intervals, anchors)


def open_to_closed(m: LineModel) -> LineModel:
    """Add one identity order in which each vertex gets the singleton of itself."""
    if m.flavor != OPEN:
        raise ModelError("expected an open model")
    m.check()
    extra = m.vertices
    intervals = {x: ivs + (Interval(i, i + 1),) for i, x in enumerate(extra)
                 for ivs in (m.intervals[x],)}
    return LineModel(CLOSED, m.orders + (extra,), intervals, dict(m.anchors))


def restrict_model(m: LineModel, subset: Iterable[int]) -> LineModel:
    """Model of the induced subgraph on ``subset`` (labels kept)."""
    keep = set(subset)
    if not keep:
        raise ModelError("cannot restrict to an empty vertex set")
    if not keep <= set(m.intervals):
        raise ModelError("subset contains vertices outside the model")
    orders = []
    # survivors[j][q] = number of kept vertices strictly before position q
    survivors = []
    for order in m.orders:
        orders.append(tuple(v for v in order if v in keep))
        acc = [0]
        for v in order:
            acc.append(acc[-1] + (v in keep))
        survivors.append(acc)
    intervals = {
        x: tuple(Interval(survivors[j][iv.lo], survivors[j][iv.hi]) for j, iv in enumerate(m.intervals[x]))
        for x in keep
    }
    anchors = {x: j for x, j in m.anchors.items() if x in keep}
    return LineModel(m.flavor, tuple(orders), intervals, anchors)


def pad_orders(m: LineModel, target_p: int) -> LineModel:
    """Append identity orders with empty ``[n, n)`` intervals up to ``target_p`` orders."""
    if target_p < m.p:
        raise ModelError("cannot pad %d orders down to %d" % (m.p, target_p))
    if target_p == m.p:
        return m
    extra = target_p - m.p
    n = m.n
    empty = (Interval(n, n),) * extra
    return LineModel(
        m.flavor,
        m.orders + (m.vertices,) * extra,
        {x: ivs + empty for x, ivs in m.intervals.items()},
        dict(m.anchors),
    )


def concat_disjoint_union(models: Sequence[LineModel]) -> LineModel:
    """Model of the disjoint union: orders are concatenated block by block.

    Shorter models are padded first, so the result has ``max p`` orders.
    Anchors are dropped (only the last block would still reach the end).
    """
    if not models:
        raise ModelError("need at least one model")
    flavor = models[0].flavor
    if any(mm.flavor != flavor for mm in models):
        raise ModelError("mixed flavors")
    p = max(mm.p for mm in models)
    orders: list[list[int]] = [[] for _ in range(p)]
    intervals: dict[int, tuple[Interval, ...]] = {}
    offset = 0
    for mm in models:
        mm = pad_orders(mm, p)
        for j in range(p):
            orders[j].extend(mm.orders[j])
        for x, ivs in mm.intervals.items():
            if x in intervals:
                raise ModelError("vertex %d appears in two models" % x)
            intervals[x] = tuple(Interval(iv.lo + offset, iv.hi + offset) for iv in ivs)
        offset += mm.n
    return LineModel(flavor, tuple(tuple(o) for o in orders), intervals, {})


def encoding_size_integers(kind: str, n: int, k: int) -> int:
    """Integers needed to store an encoding with parameter ``k``.

    One order plus ``k`` intervals per vertex for contiguity, ``k`` orders
    plus ``k`` intervals per vertex for linearity.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if kind == "contiguity":
        return (2 * k + 1) * n
    if kind == "linearity":
        return 3 * k * n
    raise ValueError("kind must be 'contiguity' or 'linearity'")


# ---------------------------------------------------------------------------
# file formats


def format_line_model(m: LineModel) -> str:
    lines = ["LINMODEL %s %d %d" % (m.flavor, m.p, m.n)]
    lines += [" ".join(map(str, order)) for order in m.orders]
    for x in m.vertices:
        lines.append(" ".join([str(x)] + ["%d:%d" % iv for iv in m.intervals[x]]))
    if m.anchors:
        lines.append("ANCHORS")
        lines.append(" ".join(str(m.anchors[x]) if x in m.anchors else "-" for x in m.vertices))
    return "\n".join(lines) + "\n"


def _interval(token: str, lineno: int) -> Interval:
    lo, sep, hi = token.partition(":")
    if not sep:
        raise ParseError("malformed interval %r at line %d" % (token, lineno))
    try:
        return Interval(int(lo), int(hi))
    except ValueError:
        raise ParseError("malformed interval %r at line %d" % (token, lineno)) from None


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError("malformed token %r at line %d" % (token, lineno)) from None


def parse_line_model(text: str) -> LineModel:
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1) if ln.strip()]
    if not lines:
        raise ParseError("empty model file")
    lineno, header = lines[0]
    head = header.split()
    if len(head) != 4 or head[0] != "LINMODEL" or head[1] not in (CLOSED, OPEN):
        raise ParseError("bad LINMODEL header at line %d" % lineno)
    flavor, p, n = head[1], _int(head[2], lineno), _int(head[3], lineno)
    body = lines[1:]
    if len(body) < p + n:
        raise ParseError("model file truncated")
    orders = []
    for lineno, line in body[:p]:
        order = tuple(_int(t, lineno) for t in line.split())
        if len(order) != n:
            raise ParseError("order at line %d has %d entries, expected %d" % (lineno, len(order), n))
        orders.append(order)
    intervals = {}
    for lineno, line in body[p:p + n]:
        tokens = line.split()
        if len(tokens) != p + 1:
            raise ParseError("expected vertex and %d intervals at line %d" % (p, lineno))
        intervals[_int(tokens[0], lineno)] = tuple(_interval(t, lineno) for t in tokens[1:])
    if len(intervals) != n:
        raise ParseError("duplicate vertex lines")
    anchors = {}
    rest = body[p + n:]
    if rest:
        lineno, tag = rest[0]
        if tag != "ANCHORS" or len(rest) != 2:
            raise ParseError("unexpected content at line %d" % lineno)
        lineno, line = rest[1]
        tokens = line.split()
        if len(tokens) != n:
            raise ParseError("expected %d anchor tokens at line %d" % (n, lineno))
        for x, tok in zip(sorted(intervals), tokens):
            if tok != "-":
                anchors[x] = _int(tok, lineno)
    m = LineModel(flavor, tuple(orders), intervals, anchors)
    try:
        m.check()
    except ModelError as exc:
        raise ParseError(str(exc)) from None
    return m


def format_contiguity_model(m: ContiguityModel) -> str:
    lines = ["CONTMODEL %d" % m.n, " ".join(map(str, m.order))]
    for x in sorted(m.intervals):
        lines.append(" ".join([str(x)] + ["%d:%d" % iv for iv in m.intervals[x]]))
    return "\n".join(lines) + "\n"


def parse_contiguity_model(text: str) -> ContiguityModel:
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1) if ln.strip()]
    if len(lines) < 2:
        raise ParseError("contiguity model truncated")
    lineno, header = lines[0]
    head = header.split()
    if len(head) != 2 or head[0] != "CONTMODEL":
        raise ParseError("bad CONTMODEL header at line %d" % lineno)
    n = _int(head[1], lineno)
    lineno, line = lines[1]
    order = tuple(_int(t, lineno) for t in line.split())
    if len(lines) != n + 2:
        raise ParseError("expected %d vertex lines" % n)
    intervals = {}
    for lineno, line in lines[2:]:
        tokens = line.split()
        intervals[_int(tokens[0], lineno)] = tuple(_interval(t, lineno) for t in tokens[1:])
    m = ContiguityModel(order, intervals)
    try:
        m.check()
    except ModelError as exc:
        raise ParseError(str(exc)) from None
    return m


def runs(order: Sequence[int], members: set[int] | frozenset[int]) -> list[Interval]:
    """Maximal runs of consecutive positions of ``order`` holding members of ``members``."""
    out = []
    start = None
    for i, v in enumerate(order):
        if v in members:
            if start is None:
                start = i
        elif start is not None:
            out.append(Interval(start, i))
            start = None
    if start is not None:
        out.append(Interval(start, len(order)))
    return out


def contiguity_model_for_order(g: Graph, order: Sequence[int], closed: bool = True) -> ContiguityModel:
    """The contiguity model induced by a fixed order: each neighbourhood split into its runs."""
    return ContiguityModel(tuple(order), {
        x: tuple(runs(order, _neighborhood(g, x, closed))) for x in range(g.n)})
