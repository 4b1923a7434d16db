"""Query benchmark and the linearity-vs-contiguity table on complete binary cotrees."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

import numpy as np

from .encoder import encode
from .graphs import SERIES, Cotree, Graph, cotree_to_graph, gen_binary_cotree
from .models import LineModel, encoding_size_integers, query_mask
from .oracle import bruteforce_contiguity
from .rank import factorial_rank


def graph_mask(g: Graph, x: int) -> np.ndarray:
    mask = np.zeros(g.n, dtype=bool)
    mask[list(g.adjacency[x])] = True
    mask[x] = True
    return mask


def cotree_mask(t: Cotree, x: int) -> np.ndarray:
    """``N[x]`` as a boolean vector, read from the cotree without building the graph."""
    leaves = _leaf_array(t)
    mask = np.zeros(t.n, dtype=bool)
    mask[x] = True
    u = t.leaf_node[x]
    par = t.parent
    while par[u] != -1:
        z = par[u]
        if t.labels[z] == SERIES:
            s, e = t.span[z]
            ms, me = t.span[u]
            mask[leaves[s:ms]] = True
            mask[leaves[me:e]] = True
        u = z
    return mask


_LEAF_ARRAYS: dict[int, tuple[Cotree, np.ndarray]] = {}


def _leaf_array(t: Cotree) -> np.ndarray:
    hit = _LEAF_ARRAYS.get(id(t))
    if hit is None or hit[0] is not t:
        hit = (t, np.array(t.leaf_order, dtype=np.int64))
        _LEAF_ARRAYS.clear()
        _LEAF_ARRAYS[id(t)] = hit
    return hit[1]


@dataclass
class BenchReport:
    count: int
    mismatches: list[int] = field(default_factory=list)
    model_seconds: float = 0.0
    adjacency_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __str__(self) -> str:
        per = (lambda s: 1e6 * s / self.count) if self.count else (lambda s: 0.0)
        lines = [
            "queries\t%d" % self.count,
            "equal\t%d" % (self.count - len(self.mismatches)),
            "model_us_per_query\t%.2f" % per(self.model_seconds),
            "adjacency_us_per_query\t%.2f" % per(self.adjacency_seconds),
        ]
        lines += ["mismatch\t%d" % x for x in self.mismatches]
        return "\n".join(lines)


def bench_queries(model: LineModel, reference: Graph | Cotree, count: int, seed: int = 0) -> BenchReport:
    """Time ``count`` seeded random neighbourhood queries against the reference adjacency."""
    n = model.n
    if reference.n != n:
        raise ValueError("model has %d vertices, reference has %d" % (n, reference.n))
    rng = random.Random(seed)
    sample = [rng.randrange(n) for _ in range(count)]
    ref = graph_mask if isinstance(reference, Graph) else cotree_mask
    report = BenchReport(count)
    for x in sample:
        t0 = time.perf_counter()
        got = query_mask(model, x)
        t1 = time.perf_counter()
        want = ref(reference, x)
        t2 = time.perf_counter()
        report.model_seconds += t1 - t0
        report.adjacency_seconds += t2 - t1
        if not np.array_equal(got, want):
            report.mismatches.append(x)
    return report


def fixed_order_contiguity(t: Cotree) -> int:
    """Largest number of runs any ``N[x]`` splits into along the cotree's leaf order.

    An upper bound on the contiguity; every subtree is a contiguous run, so
    each neighbourhood is a union of ``O(height)`` known ranges.
    """
    pos = {v: i for i, v in enumerate(t.leaf_order)}
    par = t.parent
    worst = 0
    for x in t.leaf_order:
        ranges = [(pos[x], pos[x] + 1)]
        u = t.leaf_node[x]
        while par[u] != -1:
            z = par[u]
            if t.labels[z] == SERIES:
                s, e = t.span[z]
                ms, me = t.span[u]
                if s < ms:
                    ranges.append((s, ms))
                if me < e:
                    ranges.append((me, e))
            u = z
        ranges.sort()
        count, reach = 0, -1
        for lo, hi in ranges:
            if lo > reach:
                count += 1
            reach = max(reach, hi)
        worst = max(worst, count)
    return worst


@dataclass(frozen=True)
class ExperimentRow:
    h: int
    n: int
    rank: int
    p_encoder: int
    cont_lower: int | None
    cont_upper: int
    size_lin: int
    size_adj: int

    HEADER = "h\tn\trank\tp_encoder\tcont_lower\tcont_upper\tsize_lin\tsize_adj"

    def __str__(self) -> str:
        cells = [self.h, self.n, self.rank, self.p_encoder,
                 "-" if self.cont_lower is None else self.cont_lower,
                 self.cont_upper, self.size_lin, self.size_adj]
        return "\t".join(map(str, cells))


def experiment_ratio(h_max: int, seed: int = 0, samples: int = 512,
                     exact_cont_up_to: int = 3) -> list[ExperimentRow]:
    """One row per height ``h = 1..h_max`` of the complete binary cotree with series root.

    Each encoder model is checked on ``min(n, samples)`` seeded random
    vertices; a mismatch raises ``AssertionError``.  ``cont_lower`` is the
    exact contiguity for ``h <= exact_cont_up_to`` and ``None`` elsewhere.
    """
    if not 1 <= h_max <= 20:
        raise ValueError("h_max must be in 1..20")
    rng = random.Random(seed)
    rows = []
    for h in range(1, h_max + 1):
        t = gen_binary_cotree(h, SERIES)
        ann = factorial_rank(t)
        model = encode(t, ann)
        n = t.n
        report = bench_queries(model, t, min(n, samples), rng.getrandbits(64))
        if not report.ok:
            raise AssertionError("h=%d: model disagrees with cotree at %s" % (h, report.mismatches[:5]))
        cont_lower = None
        if h <= exact_cont_up_to:
            cont_lower = bruteforce_contiguity(cotree_to_graph(t)).value
        rows.append(ExperimentRow(
            h, n, ann.root_rank, model.p, cont_lower, fixed_order_contiguity(t),
            encoding_size_integers("linearity", n, model.p), n + 2 * t.edge_count()))
    return rows
