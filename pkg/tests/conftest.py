import itertools
from functools import lru_cache

import networkx as nx
import pytest

from cographlin.graphs import PARALLEL, SERIES, Cotree, Graph

# ---------------------------------------------------------------------------
# shape enumerators used as ground truth (independent of the library)


@lru_cache(maxsize=None)
def reduced_trees(leaves):
    """Series-reduced rooted trees (no unary nodes) with ``leaves`` leaves, as sorted tuples."""
    if leaves == 1:
        return ((),)
    out = set()
    for parts in _partitions(leaves):
        if len(parts) < 2:
            continue
        pools = [reduced_trees(k) for k in parts]
        for combo in itertools.product(*pools):
            out.add(tuple(sorted(combo)))
    return tuple(sorted(out))


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def shape_to_cotree(shape, root_label):
    counter = itertools.count()

    def build(node, label):
        if node == ():
            return next(counter)
        other = PARALLEL if label == SERIES else SERIES
        return (label, [build(c, other) for c in node])

    return Cotree.from_nested(build(shape, root_label))


def all_cotrees(max_leaves):
    """Every canonical cotree shape with at most ``max_leaves`` leaves, both root labels."""
    for n in range(1, max_leaves + 1):
        for shape in reduced_trees(n):
            labels = (SERIES,) if n == 1 else (SERIES, PARALLEL)
            for lab in labels:
                yield shape_to_cotree(shape, lab)


def from_nx(g):
    g = nx.convert_node_labels_to_integers(g)
    return Graph.from_edges(g.number_of_nodes(), g.edges())


def atlas_graphs(max_n):
    """All graphs up to isomorphism with 1..max_n vertices."""
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == 0:
            continue
        if g.number_of_nodes() > max_n:
            break
        yield from_nx(g)


def is_cograph(g):
    return not any(
        _induced_p4(g, quad) for quad in itertools.combinations(range(g.n), 4))


def _induced_p4(g, quad):
    for a, b, c, d in itertools.permutations(quad):
        if (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
                and not g.has_edge(a, c) and not g.has_edge(b, d) and not g.has_edge(a, d)):
            return True
    return False


@pytest.fixture
def c4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def p4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


# ---------------------------------------------------------------------------
# one pass/fail line per acceptance criterion in the terminal summary

_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_ac" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line("%s %s" % ("PASS" if outcome == "passed" else "FAIL", name))
