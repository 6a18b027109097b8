"""Command-line entry point: ``adjgraph {gen,stats,bench,convert,alg}``.

Exit codes: 0 success, 2 usage or bad parameter, 3 I/O failure,
4 malformed input file, 5 algorithm failure.
"""
from __future__ import annotations

import argparse
import csv
import math
import sys

from . import analytics, bench, centrality, generators, manipulate, traverse
from . import io as gio
from .core import DirectedGraph, DirectedMultigraph, UndirectedGraph
from .errors import (
    ConvergenceError,
    GraphError,
    GraphFormatError,
    MalformedLineError,
    NodeNotFoundError,
    ParameterError,
)

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_FORMAT, EXIT_ALGORITHM = 0, 2, 3, 4, 5

_CONTAINERS = {"undirected": UndirectedGraph, "directed": DirectedGraph,
               "multigraph": DirectedMultigraph}


class UsageError(Exception):
    pass


# graph input ---------------------------------------------------------------

def read_graph(path, fmt="auto", directed=None, container=None):
    """Load ``path``; ``auto`` picks binary when the file starts with the magic."""
    if fmt == "auto":
        fmt = "binary" if gio.is_binary_file(path) else "text"
    if fmt == "binary":
        return gio.load_binary(path)
    if directed is None:
        directed = gio.sniff_directed(path)
    try:
        return gio.load_edge_list(path, directed=directed,
                                  container=_CONTAINERS.get(container))
    except MalformedLineError as exc:
        exc.path = path
        raise


def write_graph(g, path, fmt):
    if fmt == "binary":
        gio.save_binary(g, path)
    else:
        gio.save_edge_list(g, path)


# gen -------------------------------------------------------------------------

def _floats(text):
    return [float(x) for x in text.replace(",", " ").split()]


def _matrix(text):
    return [_floats(row) for row in text.split(";")]


# model -> (generator, CLI parameters passed positionally)
_MODELS = {
    "complete": (generators.complete, ["n"]),
    "circle": (generators.circle, ["n"]),
    "star": (generators.star, ["n"]),
    "grid": (generators.grid, ["rows", "cols"]),
    "tree": (generators.tree, ["fanout", "depth"]),
    "gnm": (generators.gen_gnm, ["n", "m", "directed", "seed"]),
    "bipartite": (generators.gen_bipartite_random, ["n1", "n2", "m", "seed"]),
    "regular": (generators.gen_constant_degree, ["n", "k", "seed"]),
    "degseq": (generators.gen_degree_sequence, ["degrees", "seed"]),
    "ba": (generators.gen_barabasi_albert, ["n", "k", "seed"]),
    "ws": (generators.gen_watts_strogatz, ["n", "k", "beta", "seed"]),
    "rmat": (generators.gen_rmat, ["scale", "m", "a", "b", "c", "seed"]),
    "kronecker": (generators.gen_kronecker, ["initiator", "iters", "seed"]),
    "forestfire": (generators.gen_forest_fire, ["n", "p_fwd", "p_bwd", "seed"]),
    "copying": (generators.gen_copying, ["n", "alpha", "seed"]),
    "powerlaw": (generators.gen_power_law, ["n", "gamma", "seed"]),
}


def cmd_gen(args):
    fn, params = _MODELS[args.model]
    values = []
    for p in params:
        v = getattr(args, p)
        if v is None and p not in ("seed", "directed"):
            raise UsageError(f"model {args.model!r} needs --{p.replace('_', '-')}")
        values.append(v)
    g = fn(*values)
    if args.output:
        write_graph(g, args.output, args.format)
    print(f"nodes {g.get_nodes()} edges {g.get_edges()}")
    return EXIT_OK


# stats ---------------------------------------------------------------------

def graph_stats(g):
    """Ordered ``(metric, value)`` pairs reported by ``stats``."""
    summary = g.degree_summary()
    comps = manipulate.weakly_connected_components(g)
    tri = analytics.count_triangles(g)
    return [
        ("type", type(g).__name__),
        ("nodes", g.get_nodes()),
        ("edges", g.get_edges()),
        ("deg_max", summary.deg_max),
        ("wcc_count", len(comps)),
        ("wcc_largest", max((len(c) for c in comps), default=0)),
        ("triangles", tri.total),
        ("clustering", analytics.clustering_coefficient(g).average),
    ]


def _fmt(v, precision):
    if isinstance(v, float):
        if math.isinf(v):
            return "inf"
        return f"{v:.{precision}f}"
    return str(v)


def cmd_stats(args):
    g = read_graph(args.input, args.format, args.directed)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(("metric", "value"))
    for k, v in graph_stats(g):
        w.writerow((k, _fmt(v, args.precision)))
    if args.histogram:
        for d, c in g.degree_summary().histogram.items():
            w.writerow((f"degree_{d}", c))
    return EXIT_OK


# bench ---------------------------------------------------------------------

def cmd_bench(args):
    if args.repeats < 1:
        raise UsageError("--repeats must be >= 1")
    reports = bench.run_suite(args.suite, args.n, args.m, args.seed, args.repeats)
    if args.output:
        with open(args.output, "w") as f:
            bench.write_csv(reports, f)
    else:
        bench.write_csv(reports)
    return EXIT_OK


# convert -------------------------------------------------------------------

def cmd_convert(args):
    g = read_graph(args.input, args.from_format, args.directed, args.container)
    write_graph(g, args.output, args.to_format)
    print(f"nodes {g.get_nodes()} edges {g.get_edges()}")
    return EXIT_OK


# alg -------------------------------------------------------------------------

def _scores(header, mapping):
    return header, [(k, v) for k, v in sorted(mapping.items())]


def _need(args, name):
    v = getattr(args, name)
    if v is None:
        raise UsageError(f"algorithm {args.name!r} needs --{name}")
    return v


def _alg_pagerank(g, a):
    return _scores(("node", "score"), centrality.pagerank(g, a.damping, a.iters, a.tol))


def _alg_ppr(g, a):
    return _scores(("node", "score"),
                   centrality.personalized_pagerank_power(g, _need(a, "source"), a.alpha))


def _alg_pprbi(g, a):
    est = centrality.ppr_bidirectional(g, _need(a, "source"), _need(a, "target"),
                                       alpha=a.alpha, eps=a.eps, seed=a.seed)
    return ("metric", "value"), [("ppr", est)]


def _alg_hits(g, a):
    res = centrality.hits(g, a.iters if a.iters is not None else 100, a.tol)
    rows = [(v, res.hubs[v], res.authorities[v]) for v in sorted(res.hubs)]
    return ("node", "hub", "authority"), rows


def _alg_closeness(g, a):
    rows = [(v, centrality.closeness_centrality(g, v), centrality.farness(g, v))
            for v in g.nodes().tolist()]
    return ("node", "closeness", "farness"), rows


def _alg_eigen(g, a):
    return _scores(("node", "score"), centrality.eigenvector_centrality(g).scores)


def _alg_triangles(g, a):
    t = analytics.count_triangles(g)
    return ("node", "closed", "open"), [(v, t.closed[v], t.open[v]) for v in sorted(t.closed)]


def _alg_components(fn):
    def run(g, a):
        rows = [(v, i) for i, comp in enumerate(fn(g)) for v in comp]
        return ("node", "component"), sorted(rows)
    return run


def _alg_bfs(g, a):
    return _scores(("node", "distance"), traverse.bfs(g, _need(a, "root"), a.direction))


def _alg_dfs(g, a):
    order = traverse.dfs(g, _need(a, "root"), a.direction)
    return ("order", "node"), list(enumerate(order))


def _alg_path(g, a):
    res = traverse.shortest_path(g, _need(a, "source"), _need(a, "target"), a.direction)
    return ("step", "node"), list(enumerate(res.path))


def _alg_scalar(name, fn):
    def run(g, a):
        return ("metric", "value"), [(name, fn(g, a))]
    return run


ALGORITHMS = {
    "pagerank": _alg_pagerank,
    "ppr": _alg_ppr,
    "pprbi": _alg_pprbi,
    "hits": _alg_hits,
    "degree": lambda g, a: _scores(("node", "score"), centrality.degree_centrality(g)),
    "closeness": _alg_closeness,
    "betweenness": lambda g, a: _scores(("node", "score"),
                                        centrality.betweenness(g, a.fraction, a.seed)),
    "eigen": _alg_eigen,
    "eigenvalue": _alg_scalar("eigenvalue", lambda g, a: analytics.leading_eigenvalue(g).value),
    "triangles": _alg_triangles,
    "clustering": lambda g, a: _scores(("node", "coefficient"),
                                       analytics.clustering_coefficient(g).per_node),
    "kcore": lambda g, a: (("node",), [(v,) for v in analytics.k_core(g, _need(a, "k")).nodes().tolist()]),
    "cores": lambda g, a: _scores(("node", "core"), analytics.core_decomposition(g)),
    "wcc": _alg_components(manipulate.weakly_connected_components),
    "scc": _alg_components(manipulate.strongly_connected_components),
    "triads": lambda g, a: (("class", "count"), list(analytics.triad_census(g).items())),
    "bfs": _alg_bfs,
    "dfs": _alg_dfs,
    "path": _alg_path,
    "diameter": _alg_scalar("diameter", lambda g, a: traverse.diameter_exact(g, a.direction)),
    "effdiam": _alg_scalar("effective_diameter",
                           lambda g, a: traverse.effective_diameter(g, a.sources, a.seed,
                                                                    direction=a.direction)),
    "hopplot": lambda g, a: (("h", "fraction"),
                             traverse.hop_plot(g, a.sources, a.seed, a.direction)),
}


def cmd_alg(args):
    if args.name not in ALGORITHMS:
        raise UsageError(f"unknown algorithm {args.name!r}; available: {', '.join(sorted(ALGORITHMS))}")
    g = read_graph(args.input, args.format, args.directed)
    header, rows = ALGORITHMS[args.name](g, args)
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(x, args.precision) for x in row])
    finally:
        if args.output:
            out.close()
    return EXIT_OK


# parser ----------------------------------------------------------------------

def _input_flags(p):
    p.add_argument("--format", choices=("auto", "binary", "text"), default="auto",
                   help="input format (default: sniff the file header)")
    p.add_argument("--directed", action="store_true", default=None,
                   help="read a text edge list as directed")
    p.add_argument("--precision", type=int, default=6, help="decimals for float output")


def build_parser():
    parser = argparse.ArgumentParser(prog="adjgraph", description="Graph generation, analysis and benchmarks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("model", choices=sorted(_MODELS))
    for flag in ("n", "m", "k", "n1", "n2", "rows", "cols", "fanout", "depth", "scale", "iters"):
        p.add_argument(f"--{flag}", type=int)
    for flag in ("beta", "a", "b", "c", "alpha", "gamma", "p-fwd", "p-bwd"):
        p.add_argument(f"--{flag}", type=float)
    p.add_argument("--degrees", type=lambda s: [int(x) for x in s.split(",")],
                   help="comma-separated degree sequence")
    p.add_argument("--initiator", type=_matrix, help="rows separated by ';', entries by ',' or spaces")
    p.add_argument("--directed", action="store_true", default=False)
    p.add_argument("--seed", type=int)
    p.add_argument("-o", "--output")
    p.add_argument("--out-format", dest="format", choices=("binary", "text"), default="binary")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stats", help="summary statistics of a graph file")
    p.add_argument("input")
    _input_flags(p)
    p.add_argument("--histogram", action="store_true", help="also list the degree histogram")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("bench", help="run a benchmark suite, CSV on stdout")
    p.add_argument("suite", choices=bench.SUITES)
    p.add_argument("--n", type=int, default=100_000)
    p.add_argument("--m", type=int, default=1_000_000)
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--threads", type=int, default=1,
                   help="accepted for compatibility; suites run on one thread")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("convert", help="convert between text and binary")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--from", dest="from_format", choices=("auto", "binary", "text"), default="auto")
    p.add_argument("--to", dest="to_format", choices=("binary", "text"), default="binary")
    p.add_argument("--directed", action="store_true", default=None)
    p.add_argument("--container", choices=sorted(_CONTAINERS),
                   help="container for text input (default: from --directed)")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("alg", help="run an algorithm, CSV output")
    p.add_argument("name", help="one of: " + ", ".join(sorted(ALGORITHMS)))
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output")
    _input_flags(p)
    p.add_argument("--iters", type=int, default=None)
    p.add_argument("--damping", type=float, default=0.85)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--alpha", type=float, default=0.15)
    p.add_argument("--eps", type=float, default=0.1)
    p.add_argument("--source", type=int)
    p.add_argument("--target", type=int)
    p.add_argument("--root", type=int)
    p.add_argument("-k", "--k", type=int)
    p.add_argument("--fraction", type=float, default=1.0)
    p.add_argument("--sources", type=int, default=None, help="BFS sample size (default: all)")
    p.add_argument("--direction", choices=("out", "in", "both"), default="out")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_alg)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "alg" and args.name == "pagerank" and args.iters is None:
        args.iters = 10
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"adjgraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParameterError, NodeNotFoundError) as exc:
        print(f"adjgraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MalformedLineError as exc:
        where = getattr(exc, "path", None)
        print(f"adjgraph: error: {where}: {exc}" if where else f"adjgraph: error: {exc}",
              file=sys.stderr)
        return EXIT_FORMAT
    except GraphFormatError as exc:
        print(f"adjgraph: error: {getattr(args, 'input', '')}: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except OSError as exc:
        print(f"adjgraph: error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ConvergenceError, GraphError) as exc:
        print(f"adjgraph: error: {exc}", file=sys.stderr)
        return EXIT_ALGORITHM


if __name__ == "__main__":
    sys.exit(main())
