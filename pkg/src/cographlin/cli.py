"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 usage or input error, 3 guard violation.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .encoder import encode
from .experiment import ExperimentRow, bench_queries, experiment_ratio
from .graphs import (
    Cotree,
    Graph,
    NotCographError,
    ParseError,
    build_cotree,
    cotree_to_graph,
    format_cotree,
    gen_binary_cotree,
    gen_double_factorial,
    gen_random_cotree,
    parse_cotree,
    parse_edge_list,
)
from .models import (
    ModelError,
    encoding_size_integers,
    format_contiguity_model,
    format_line_model,
    parse_line_model,
    query_closed_neighborhood,
    verify_line_model,
)
from .oracle import bruteforce_contiguity, bruteforce_linearity
from .rank import GuardError, factorial_rank

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _Usage(message)


class _Usage(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path: str | None, text: str, out) -> None:
    if path is None or path == "-":
        out.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def read_graph_or_cotree(text: str) -> Graph | Cotree:
    """Edge lists start with a two-integer header line; anything else is cotree text."""
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if len(line.split()) == 2 and all(tok.lstrip("-").isdigit() for tok in line.split()):
            return parse_edge_list(text)
        break
    return parse_cotree(text)


def _as_graph(obj: Graph | Cotree) -> Graph:
    return cotree_to_graph(obj) if isinstance(obj, Cotree) else obj


def _as_cotree(obj: Graph | Cotree) -> Cotree:
    return obj if isinstance(obj, Cotree) else build_cotree(obj)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cographlin", description="Line-model encodings of cographs.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    g = sub.add_parser("gen", help="write a cotree")
    g.add_argument("--family", choices=["binary", "dfact", "random"], required=True)
    g.add_argument("--h", type=int, help="height (binary, dfact)")
    g.add_argument("--n", type=int, help="leaf count (random)")
    g.add_argument("--root", choices=["S", "P"], default="S")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")

    r = sub.add_parser("rank", help="print 'node depth rank minimal' for every cotree node")
    r.add_argument("input", help="cotree or edge-list file ('-' for stdin)")

    e = sub.add_parser("encode", help="encode a cograph as a closed line-model")
    e.add_argument("input")
    e.add_argument("-o", "--output", help="model file (default: stdout, before the stats line)")

    v = sub.add_parser("verify", help="check a model against a graph or cotree")
    v.add_argument("input")
    v.add_argument("model")

    o = sub.add_parser("oracle", help="brute-force linearity or contiguity")
    o.add_argument("input")
    o.add_argument("--param", choices=["lin", "cont"], required=True)
    o.add_argument("--pmax", type=int, default=3)
    flav = o.add_mutually_exclusive_group()
    flav.add_argument("--closed", dest="closed", action="store_true", default=True)
    flav.add_argument("--open", dest="closed", action="store_false")
    o.add_argument("--force", action="store_true", help="lift the size guard")
    o.add_argument("--witness", help="write the witness model here")

    q = sub.add_parser("query", help="print N[x] read from a model")
    q.add_argument("model")
    q.add_argument("vertex", type=int)

    b = sub.add_parser("bench", help="model queries vs adjacency on sampled vertices")
    b.add_argument("model")
    b.add_argument("input")
    b.add_argument("--count", type=int, default=1000)
    b.add_argument("--seed", type=int, default=0)

    x = sub.add_parser("experiment", help="linearity vs contiguity table on binary cotrees")
    x.add_argument("--h-max", type=int, default=12)
    x.add_argument("--seed", type=int, default=0)
    x.add_argument("--samples", type=int, default=512)
    return p


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = _parser().parse_args(argv)
        return _COMMANDS[args.command](args, stdout)
    except _Usage as exc:
        print("error: %s" % exc, file=stderr)
        return EXIT_USAGE
    except GuardError as exc:
        print("guard: %s" % exc, file=stderr)
        return EXIT_GUARD
    except (ParseError, ModelError, NotCographError, ValueError, KeyError, OSError) as exc:
        print("error: %s" % exc, file=stderr)
        return EXIT_USAGE


def _cmd_gen(args, out) -> int:
    if args.family == "random":
        if args.n is None:
            raise _Usage("--n is required for the random family")
        t = gen_random_cotree(args.n, args.seed)
    else:
        if args.h is None:
            raise _Usage("--h is required for the %s family" % args.family)
        gen = gen_binary_cotree if args.family == "binary" else gen_double_factorial
        t = gen(args.h, args.root)
    _write(args.output, format_cotree(t) + "\n", out)
    return EXIT_OK


def _cmd_rank(args, out) -> int:
    t = _as_cotree(read_graph_or_cotree(_read(args.input)))
    ann = factorial_rank(t)
    for u in t.preorder:
        out.write("%d %d %d %s\n" % (u, t.depth[u], ann.rank[u], str(ann.minimal[u]).lower()))
    return EXIT_OK


def _cmd_encode(args, out) -> int:
    t = _as_cotree(read_graph_or_cotree(_read(args.input)))
    ann = factorial_rank(t)
    m = encode(t, ann)
    _write(args.output, format_line_model(m), out)
    k = ann.root_rank
    bound = 2 * k + 2 if k >= 1 and ann.minimal[t.root] else 2 * k + 3
    out.write("n=%d rank=%d minimal=%s p=%d bound=%d size_integers=%d\n" % (
        t.n, k, str(ann.minimal[t.root]).lower(), m.p, bound,
        encoding_size_integers("linearity", t.n, m.p)))
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    g = _as_graph(read_graph_or_cotree(_read(args.input)))
    m = parse_line_model(_read(args.model))
    report = verify_line_model(g, m)
    out.write(str(report) + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_oracle(args, out) -> int:
    g = _as_graph(read_graph_or_cotree(_read(args.input)))
    if args.param == "lin":
        res = bruteforce_linearity(g, args.pmax, args.closed, force=args.force)
    else:
        res = bruteforce_contiguity(g, args.closed, force=args.force)
    out.write("%s\n" % ("-" if res.value is None else res.value))
    if args.witness and res.witness is not None:
        text = (format_line_model(res.witness) if args.param == "lin"
                else format_contiguity_model(res.witness))
        _write(args.witness, text, out)
    return EXIT_OK


def _cmd_query(args, out) -> int:
    m = parse_line_model(_read(args.model))
    out.write(" ".join(map(str, sorted(query_closed_neighborhood(m, args.vertex)))) + "\n")
    return EXIT_OK


def _cmd_bench(args, out) -> int:
    m = parse_line_model(_read(args.model))
    ref = read_graph_or_cotree(_read(args.input))
    report = bench_queries(m, ref, args.count, args.seed)
    out.write(str(report) + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_experiment(args, out) -> int:
    rows = experiment_ratio(args.h_max, args.seed, args.samples)
    out.write(ExperimentRow.HEADER + "\n")
    for row in rows:
        out.write(str(row) + "\n")
    return EXIT_OK


_COMMANDS = {
    "gen": _cmd_gen,
    "rank": _cmd_rank,
    "encode": _cmd_encode,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
    "query": _cmd_query,
    "bench": _cmd_bench,
    "experiment": _cmd_experiment,
}


if __name__ == "__main__":
    sys.exit(main())
