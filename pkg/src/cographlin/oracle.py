"""Brute-force linearity and contiguity of small graphs.

Both searches enumerate vertex orders outright, so they are only usable on
a handful of vertices.  Size guards raise :class:`~cographlin.rank.GuardError`
instead of silently truncating the search.

Symmetries used: reversing an order maps intervals to intervals, and the
orders of a line-model can be listed in any sequence.  So each order is
taken up to reversal, and order tuples are enumerated as multisets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .graphs import Graph
from .models import (
    CLOSED,
    OPEN,
    ContiguityModel,
    Interval,
    LineModel,
    contiguity_model_for_order,
    runs,
)
from .rank import GuardError

LIN_MAX_N = 7
LIN_MAX_P = 3
CONT_MAX_N = 8


@dataclass(frozen=True)
class OracleResult:
    """``value`` is ``None`` when no model exists within the searched range."""

    value: int | None
    witness: LineModel | ContiguityModel | None = None


def _orders_up_to_reversal(n: int) -> Iterator[tuple[int, ...]]:
    for perm in itertools.permutations(range(n)):
        if n < 2 or perm[0] < perm[-1]:
            yield perm


def _run_masks(order: tuple[int, ...], targets: list[int]) -> list[tuple[tuple[int, int, int], ...]]:
    """Per vertex: (bitmask, lo, hi) of every maximal run of its target set, plus the empty run."""
    out = []
    for target in targets:
        members = {v for v in order if target >> v & 1}
        entries = [(0, len(order), len(order))]
        for iv in runs(order, members):
            mask = 0
            for v in order[iv.lo:iv.hi]:
                mask |= 1 << v
            entries.append((mask, iv.lo, iv.hi))
        out.append(tuple(entries))
    return out


def bruteforce_linearity(g: Graph, p_max: int = 3, closed: bool = True,
                         force: bool = False) -> OracleResult:
    """Smallest ``p <= p_max`` admitting a ``p``-line-model of ``g``.

    For each candidate tuple of orders a vertex is satisfied if one maximal
    run of its neighbourhood per order (or nothing) unions to the whole
    neighbourhood; taking maximal runs loses nothing, since enlarging an
    interval inside the neighbourhood keeps the union exact.
    """
    n = g.n
    if not force and (n > LIN_MAX_N or p_max > LIN_MAX_P):
        raise GuardError("linearity oracle limited to n <= %d, p_max <= %d (got n=%d, p_max=%d)"
                         % (LIN_MAX_N, LIN_MAX_P, n, p_max))
    if n == 0:
        raise ValueError("empty graph")
    targets = []
    for x in range(n):
        nb = g.closed_neighborhood(x) if closed else g.open_neighborhood(x)
        targets.append(sum(1 << v for v in nb))
    orders = list(_orders_up_to_reversal(n))
    table = [_run_masks(o, targets) for o in orders]

    for p in range(1, p_max + 1):
        for combo in itertools.combinations_with_replacement(range(len(orders)), p):
            choice = _cover_all(combo, table, targets)
            if choice is not None:
                model = LineModel(
                    CLOSED if closed else OPEN,
                    tuple(orders[c] for c in combo),
                    {x: tuple(Interval(lo, hi) for lo, hi in choice[x]) for x in range(n)},
                )
                return OracleResult(p, model)
    return OracleResult(None, None)


def _cover_all(combo, table, targets):
    picks = []
    for x, target in enumerate(targets):
        options = [table[c][x] for c in combo]
        found = None
        for chosen in itertools.product(*options):
            mask = 0
            for entry in chosen:
                mask |= entry[0]
            if mask == target:
                found = [(lo, hi) for _, lo, hi in chosen]
                break
        if found is None:
            return None
        picks.append(found)
    return picks


def bruteforce_contiguity(g: Graph, closed: bool = True, force: bool = False) -> OracleResult:
    """Minimum over orders of the largest number of runs any neighbourhood splits into."""
    n = g.n
    if not force and n > CONT_MAX_N:
        raise GuardError("contiguity oracle limited to n <= %d (got %d)" % (CONT_MAX_N, n))
    if n == 0:
        raise ValueError("empty graph")
    nbhd = [g.closed_neighborhood(x) if closed else g.open_neighborhood(x) for x in range(n)]
    best = None
    best_order = None
    for order in _orders_up_to_reversal(n):
        worst = 0
        for x in range(n):
            worst = max(worst, len(runs(order, nbhd[x])))
            if best is not None and worst >= best:
                break
        if best is None or worst < best:
            best, best_order = worst, order
            if best <= 1:
                break
    return OracleResult(best, contiguity_model_for_order(g, best_order, closed))
