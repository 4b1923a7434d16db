import pytest

from cographlin.encoder import encode
from cographlin.experiment import (
    ExperimentRow,
    bench_queries,
    cotree_mask,
    experiment_ratio,
    fixed_order_contiguity,
    graph_mask,
)
from cographlin.graphs import cotree_to_graph, gen_binary_cotree, gen_random_cotree
from cographlin.models import CLOSED, Interval, LineModel
from cographlin.oracle import bruteforce_contiguity


def test_small_rows():
    rows = experiment_ratio(3)
    assert [str(r) for r in rows] == [
        "1\t2\t0\t1\t1\t1\t6\t4",
        "2\t4\t1\t2\t2\t2\t24\t12",
        "3\t8\t1\t5\t2\t2\t120\t48",
    ]
    assert ExperimentRow.HEADER.split("\t")[0] == "h"


def test_bound_on_every_row():
    for row in experiment_ratio(10, samples=64):
        assert row.p_encoder <= 2 * row.rank + 3
        assert row.size_lin == 3 * row.p_encoder * row.n
        assert (row.cont_lower is None) == (row.h > 3)


def test_seed_changes_nothing_in_table():
    assert [str(r) for r in experiment_ratio(6, seed=1)] == [str(r) for r in experiment_ratio(6, seed=2)]


def test_h_max_range():
    with pytest.raises(ValueError):
        experiment_ratio(0)


@pytest.mark.parametrize("seed", range(10))
def test_cotree_mask_matches_graph(seed):
    t = gen_random_cotree(25, seed)
    g = cotree_to_graph(t)
    for x in range(t.n):
        assert (cotree_mask(t, x) == graph_mask(g, x)).all()


@pytest.mark.parametrize("h", [1, 2, 3])
def test_fixed_order_is_upper_bound(h):
    t = gen_binary_cotree(h)
    assert fixed_order_contiguity(t) >= bruteforce_contiguity(cotree_to_graph(t)).value


class TestBench:
    def test_ok(self):
        t = gen_random_cotree(30, 1)
        report = bench_queries(encode(t), t, 200, seed=3)
        assert report.ok and report.count == 200
        assert report.model_seconds >= 0 and "equal\t200" in str(report)

    def test_graph_reference(self):
        t = gen_random_cotree(12, 2)
        assert bench_queries(encode(t), cotree_to_graph(t), 50).ok

    def test_zero_queries(self):
        t = gen_random_cotree(5, 0)
        report = bench_queries(encode(t), t, 0)
        assert report.ok and "queries\t0" in str(report)

    def test_corrupted(self):
        t = gen_binary_cotree(2)
        m = encode(t)
        bad = LineModel(CLOSED, m.orders, {x: tuple(Interval(0, 0) for _ in ivs) for x, ivs in m.intervals.items()})
        report = bench_queries(bad, t, 20)
        assert not report.ok and "mismatch" in str(report)

    def test_size_mismatch(self):
        t = gen_binary_cotree(2)
        with pytest.raises(ValueError):
            bench_queries(encode(t), gen_binary_cotree(3), 5)
