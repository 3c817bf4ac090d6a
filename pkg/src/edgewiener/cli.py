"""Command-line front end.

Exit codes: 0 success, 1 usage or I/O error, 2 input rejected (not a
partial cube / not a tree), 3 a verification suite found a mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from .benzenoid import algorithm1_edge_hyper_wiener, format_hexfile, load_benzenoid, random_benzenoid
from .cutmethod import IndexReport, default_threads, edge_hyper_wiener_cut, tree_edge_hyper_wiener
from .errors import GraphError, NotPartialCubeError
from .graph import FAMILIES, format_edgelist, generate_family, read_edgelist
from .oracle import DEFAULT_MAX_EDGES, edge_indices_naive
from .polyacene import generate_polyacene
from . import verify as suites

EXIT_OK, EXIT_USAGE, EXIT_REJECTED, EXIT_MISMATCH = 0, 1, 2, 3

REPORT_FIELDS = ("m", "edge_wiener", "edge_wiener_hat", "ww_star", "edge_hyper_wiener", "method", "elapsed_ms")
INDEX_FIELDS = ("edge_wiener", "edge_wiener_hat", "ww_star", "edge_hyper_wiener")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="edgewiener", description="Edge-Wiener and edge-hyper-Wiener indices of partial cubes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="compute indices for one input file")
    p.add_argument("input", type=Path)
    p.add_argument("--format", choices=("edgelist", "benzenoid"), default="edgelist", dest="input_format")
    p.add_argument("--method", choices=("auto", "naive", "cut", "benzenoid", "tree"), default="auto")
    p.add_argument("--output", choices=("json", "csv", "text"), default="json")
    p.add_argument("--indices", default=",".join(INDEX_FIELDS),
                   help="comma-separated subset of " + ", ".join(INDEX_FIELDS))
    p.add_argument("--max-naive-edges", type=int, default=DEFAULT_MAX_EDGES)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms for byte-stable output")
    p.add_argument("--cross-check", action="store_true",
                   help="benzenoid method: recheck every cut pair geometrically")

    p = sub.add_parser("generate", help="write a benzenoid or edge-list file")
    gen = p.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    g = gen.add_parser("polyacene")
    g.add_argument("--h", type=int, required=True)
    g = gen.add_parser("random-benzenoid")
    g.add_argument("--hexes", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--pericondensed", action="store_true", help="allow vertices shared by three hexagons")
    g = gen.add_parser("family")
    g.add_argument("--kind", choices=FAMILIES, required=True, dest="family")
    g.add_argument("--n", type=int, required=True)
    for g in gen.choices.values():
        g.add_argument("-o", "--out", type=Path, default=None)

    p = sub.add_parser("verify", help="run cross-method agreement suites")
    p.add_argument("--suite", choices=suites.SUITES + ("all",), default="all")
    p.add_argument("--max-h", type=int, default=20)
    p.add_argument("--hexes", type=int, default=12)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--trees", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--counterexample", type=Path, default=None, help="write the first mismatch here as JSON")

    p = sub.add_parser("bench", help="time naive vs cut vs benzenoid on polyacenes")
    p.add_argument("--h", type=_int_list, default=[50, 100, 200])
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--max-naive-edges", type=int, default=DEFAULT_MAX_EDGES)
    p.add_argument("--threads", type=int, default=None)
    return parser


# -- compute -------------------------------------------------------------------


def run_compute(args) -> IndexReport:
    threads = args.threads or default_threads()
    wanted = [x.strip() for x in args.indices.split(",") if x.strip()]
    unknown = set(wanted) - set(INDEX_FIELDS)
    if unknown:
        raise UsageError(f"unknown index name(s): {', '.join(sorted(unknown))}")
    if args.method == "benzenoid" and args.input_format != "benzenoid":
        raise UsageError("--method benzenoid needs --format benzenoid input")

    if args.input_format == "benzenoid":
        b = load_benzenoid(args.input)
        graph = b.graph
    else:
        b = None
        graph = read_edgelist(args.input)

    method = args.method
    if method == "auto":
        method = "benzenoid" if b is not None else "tree" if graph.is_tree() else "cut"
    if method == "benzenoid":
        return algorithm1_edge_hyper_wiener(b, threads=threads, cross_check=args.cross_check)
    if method == "tree":
        return tree_edge_hyper_wiener(graph)
    if method == "naive":
        return edge_indices_naive(graph, max_edges=args.max_naive_edges)
    return edge_hyper_wiener_cut(graph, threads=threads)


def format_report(report: IndexReport, output: str, indices, timing: bool = True) -> str:
    data = report.to_dict()
    keep = [k for k in REPORT_FIELDS if k in ("m", "method") or k in indices or (k == "elapsed_ms" and timing)]
    row = {k: data[k] for k in keep}
    if output == "json":
        return json.dumps(row) + "\n"
    if output == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=keep, lineterminator="\n")
        writer.writeheader()
        writer.writerow(row)
        return buf.getvalue()
    width = max(len(k) for k in keep)
    return "".join(f"{k:<{width}}  {v}\n" for k, v in row.items())


def _cmd_compute(args) -> int:
    try:
        report = run_compute(args)
    except NotPartialCubeError as exc:
        rej = exc.rejection
        print(f"rejected: {rej.reason}", file=sys.stderr)
        if args.output == "json":
            print(json.dumps({"rejected": True, "reason": rej.reason, "witness": rej.witness}, default=str))
        return EXIT_REJECTED
    except GraphError as exc:
        if args.method == "tree" and "not a tree" in str(exc):
            print(f"rejected: {exc}", file=sys.stderr)
            return EXIT_REJECTED
        raise
    wanted = [x.strip() for x in args.indices.split(",")]
    sys.stdout.write(format_report(report, args.output, wanted, timing=not args.no_timing))
    return EXIT_OK


# -- generate ------------------------------------------------------------------


def _cmd_generate(args) -> int:
    if args.kind == "polyacene":
        text = format_hexfile(generate_polyacene(args.h).hexes, f"linear polyacene L_{args.h}")
    elif args.kind == "random-benzenoid":
        b = random_benzenoid(args.hexes, args.seed, catacondensed=not args.pericondensed)
        kind = "pericondensed" if args.pericondensed else "catacondensed"
        text = format_hexfile(b.hexes, f"random {kind} benzenoid, {args.hexes} hexagons, seed {args.seed}")
    else:
        text = format_edgelist(generate_family(args.family, args.n), f"{args.family} {args.n}")
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text, encoding="utf-8")
    return EXIT_OK


# -- verify --------------------------------------------------------------------


def _cmd_verify(args) -> int:
    names = suites.SUITES if args.suite == "all" else (args.suite,)
    failed = None
    for name in names:
        if name == "polyacene":
            result = suites.run_polyacene(args.max_h)
        elif name == "partial-cubes":
            result = suites.run_partial_cubes(args.seed, args.trees)
        else:
            result = suites.run_benzenoid(args.samples, args.hexes, args.seed)
        status = "PASS" if result.passed else "FAIL"
        print(f"{status}  {result.name:<14} {result.checked} checked")
        if not result.passed and failed is None:
            failed = result
    if failed is None:
        return EXIT_OK
    payload = json.dumps({"suite": failed.name, **failed.counterexample}, indent=2, default=str)
    if args.counterexample is not None:
        args.counterexample.write_text(payload + "\n", encoding="utf-8")
    else:
        print(payload, file=sys.stderr)
    return EXIT_MISMATCH


# -- bench ---------------------------------------------------------------------


def _best_of(repeat: int, fn):
    best, value = None, None
    for _ in range(max(1, repeat)):
        t0 = time.perf_counter()
        value = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, value


def bench_rows(hs, repeat: int = 1, max_naive_edges: int = DEFAULT_MAX_EDGES, threads: int = 1):
    for h in hs:
        b = generate_polyacene(h)
        g = b.graph
        t_cut, cut = _best_of(repeat, lambda: edge_hyper_wiener_cut(g, threads=threads))
        t_alg, alg = _best_of(repeat, lambda: algorithm1_edge_hyper_wiener(generate_polyacene(h), threads=threads))
        reports = [cut, alg]
        t_naive = None
        if g.edge_count <= max_naive_edges:
            t_naive, naive = _best_of(repeat, lambda: edge_indices_naive(g, max_edges=max_naive_edges))
            reports.append(naive)
        agree = len({r.values() for r in reports}) == 1
        yield {
            "h": h,
            "m": g.edge_count,
            "edge_wiener": cut.w_e,
            "edge_hyper_wiener": cut.ww_e,
            "naive_ms": "" if t_naive is None else f"{t_naive * 1000:.3f}",
            "cut_ms": f"{t_cut * 1000:.3f}",
            "benzenoid_ms": f"{t_alg * 1000:.3f}",
            "agree": agree,
        }


def _cmd_bench(args) -> int:
    threads = args.threads or default_threads()
    writer = None
    ok = True
    for row in bench_rows(args.h, args.repeat, args.max_naive_edges, threads):
        if writer is None:
            writer = csv.DictWriter(sys.stdout, fieldnames=list(row), lineterminator="\n")
            writer.writeheader()
        writer.writerow(row)
        sys.stdout.flush()
        ok = ok and row["agree"]
    return EXIT_OK if ok else EXIT_MISMATCH


COMMANDS = {"compute": _cmd_compute, "generate": _cmd_generate, "verify": _cmd_verify, "bench": _cmd_bench}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, OSError, ValueError) as exc:
        # ValueError covers GraphError, ParseError and BenzenoidError
        print(f"edgewiener: error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
