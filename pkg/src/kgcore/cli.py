"""Command-line interface: ``kgcore {core,decompose,query,stats,generate,bench}``.

Results go to stdout (JSON, CSV or edge-list text); diagnostics go to
stderr.  Exit codes: 0 success, 2 usage error, 3 parse error, 4 domain error.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time
from pathlib import Path

from . import compute, oracle
from .decompose import bca, cores_to_json, load_index, query_core, save_index
from .errors import ConfigError, DomainError, ParseError
from .generator import GenConfig, generate
from .hypergraph import dumps_hypergraph, load_hypergraph, stats

log = logging.getLogger("kgcore")

EXIT_USAGE, EXIT_PARSE, EXIT_DOMAIN = 2, 3, 4

BENCH_FIELDS = ["dataset", "k", "g", "algorithm", "wall_ms", "accounted_peak_bytes", "result_size"]

_CORE_ALGORITHMS = {
    "epa": compute.epa,
    "naive": compute.naive_kg_core,
    "oracle": oracle.oracle_kg_core,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _int_list(text):
    return [_positive(x) for x in text.split(",") if x]


def _emit(text, output):
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _core_payload(k, g, labels, stats_dict):
    return {"k": k, "g": g, "nodes": labels, "stats": stats_dict}


def cmd_core(args):
    G = load_hypergraph(args.input)
    nodes = _CORE_ALGORITHMS[args.algorithm](G, args.k, args.g)
    payload = _core_payload(args.k, args.g, G.label_set(nodes), stats(G, nodes).as_dict())
    _emit(json.dumps(payload) + "\n", args.output)


def cmd_decompose(args):
    G = load_hypergraph(args.input)
    result = bca(G)
    index_path = args.index or f"{args.input}.idx"
    save_index(result.skyline, index_path)
    if args.cores:
        Path(args.cores).write_text(json.dumps(cores_to_json(G.labels, result.raw)) + "\n", encoding="utf-8")
    summary = {
        "cores": len(result.raw),
        "k_max": result.k_max,
        "g_max": result.g_max,
        "index": str(index_path),
    }
    log.info("decomposed %s: %d non-empty cores", args.input, len(result.raw))
    _emit(json.dumps(summary) + "\n", args.output)


def cmd_query(args):
    index = load_index(args.index)
    nodes = query_core(index, args.k, args.g)
    labels = sorted(index.labels[v] for v in nodes)
    stats_dict = None
    if args.input:
        G = load_hypergraph(args.input)
        stats_dict = stats(G, G.node_ids(labels)).as_dict()
    _emit(json.dumps(_core_payload(args.k, args.g, labels, stats_dict)) + "\n", args.output)


def cmd_stats(args):
    G = load_hypergraph(args.input)
    nodes = None
    if args.nodes:
        tokens = Path(args.nodes).read_text(encoding="utf-8").replace(",", " ").split()
        nodes = G.node_ids(tokens)
    _emit(json.dumps(stats(G, nodes).as_dict()) + "\n", args.output)


def _config_from_args(args):
    cfg = GenConfig.from_json(args.config) if args.config else GenConfig()
    overrides = {}
    for name in ("node_count", "edge_count", "community_count", "noise", "seed",
                 "degree_exponent", "community_exponent"):
        value = getattr(args, name)
        if value is not None:
            overrides[name] = value
    if args.cardinality is not None:
        overrides["cardinality_range"] = tuple(args.cardinality)
    return GenConfig(**{**cfg.to_json(), "cardinality_range": cfg.cardinality_range, **overrides})


def cmd_generate(args):
    cfg = _config_from_args(args)
    G = generate(cfg)
    _emit(dumps_hypergraph(G), args.output)


def _bench_datasets(args):
    if args.input:
        for path in args.input:
            yield Path(path).stem, load_hypergraph(path)
    if args.sweep:
        base = _config_from_args(args)
        for n in args.sweep:
            ratio = base.edge_count / base.node_count
            cfg = GenConfig(**{**base.to_json(), "cardinality_range": base.cardinality_range,
                               "node_count": n, "edge_count": max(1, round(n * ratio))})
            yield f"synthetic-{n}", generate(cfg)


def cmd_bench(args):
    if not args.input and not args.sweep:
        raise DomainError("bench needs input files or --sweep sizes")
    out = open(args.output, "w", newline="", encoding="utf-8") if args.output else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=BENCH_FIELDS, lineterminator="\n")
        writer.writeheader()
        for name, G in _bench_datasets(args):
            for k in args.k_values:
                for g in args.g_values:
                    for algorithm in args.algorithms:
                        start = time.perf_counter()
                        report = compute.memory_report(algorithm, G, k, g)
                        elapsed = (time.perf_counter() - start) * 1000.0
                        writer.writerow({
                            "dataset": name, "k": k, "g": g, "algorithm": algorithm,
                            "wall_ms": f"{elapsed:.3f}",
                            "accounted_peak_bytes": report.peak_bytes,
                            "result_size": report.result_size,
                        })
                        log.info("%s k=%d g=%d %s: %.1f ms", name, k, g, algorithm, elapsed)
    finally:
        if out is not sys.stdout:
            out.close()


def build_parser():
    parser = _Parser(prog="kgcore", description="(k,g)-core computation and decomposition for hypergraphs")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("core", help="compute one (k,g)-core")
    p.add_argument("input")
    p.add_argument("-k", type=_positive, required=True)
    p.add_argument("-g", type=_positive, required=True)
    p.add_argument("--algorithm", choices=sorted(_CORE_ALGORITHMS), default="epa")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("decompose", help="all (k,g)-cores plus the coreness index")
    p.add_argument("input")
    p.add_argument("--index", help="index file to write (default: INPUT.idx)")
    p.add_argument("--cores", help="also write raw cores as JSON")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("query", help="answer a (k,g)-core query from an index")
    p.add_argument("-k", type=_positive, required=True)
    p.add_argument("-g", type=_positive, required=True)
    p.add_argument("--index", required=True)
    p.add_argument("--input", help="hypergraph for the stats field (omitted: stats is null)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("stats", help="subhypergraph statistics")
    p.add_argument("input")
    p.add_argument("--nodes", help="file of node labels; default is the whole hypergraph")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_stats)

    gen_flags = argparse.ArgumentParser(add_help=False)
    gen_flags.add_argument("--config", help="GenConfig JSON file; flags override it")
    gen_flags.add_argument("--node-count", dest="node_count", type=_positive)
    gen_flags.add_argument("--edge-count", dest="edge_count", type=_positive)
    gen_flags.add_argument("--cardinality", nargs=2, type=_positive, metavar=("MIN", "MAX"))
    gen_flags.add_argument("--degree-exponent", dest="degree_exponent", type=float)
    gen_flags.add_argument("--community-exponent", dest="community_exponent", type=float)
    gen_flags.add_argument("--community-count", dest="community_count", type=_positive)
    gen_flags.add_argument("--noise", type=float)
    gen_flags.add_argument("--seed", type=int)

    p = sub.add_parser("generate", parents=[gen_flags], help="write a synthetic hypergraph")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", parents=[gen_flags], help="time EPA / naive over a (k,g) grid")
    p.add_argument("input", nargs="*")
    p.add_argument("--sweep", type=_int_list, help="comma-separated node counts for generated graphs")
    p.add_argument("--k-values", dest="k_values", type=_int_list, default=[5])
    p.add_argument("--g-values", dest="g_values", type=_int_list, default=[5])
    p.add_argument("--algorithms", type=lambda s: s.split(","), default=["epa", "naive"])
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    if getattr(args, "algorithms", None):
        bad = set(args.algorithms) - {"epa", "naive"}
        if bad:
            parser.error(f"unknown algorithms: {', '.join(sorted(bad))}")
    try:
        args.func(args)
    except ParseError as exc:
        print(f"kgcore: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, ConfigError) as exc:
        print(f"kgcore: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"kgcore: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
