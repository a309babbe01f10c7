"""Command-line front end.

    graphdim compute <input> [--which subdim|dim|chi|all]
    graphdim verify <suite> [--cap N]
    graphdim embed <input> -o FILE

Reports go to stdout as a single line of JSON with sorted keys and sorted
vertex lists, so identical inputs produce byte-identical output; timing and
other diagnostics go to stderr.  Exit codes: 0 success, 1 a verification
suite found a violation, 2 parse or input error, 3 solver cap exceeded,
4 I/O error.  GRAPHDIM_CAP overrides the default solver cap of 16.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .coloring import chromatic_number, decomposition_coloring, is_proper
from .core import bits_of, encode_graph6, max_degree_within
from .dimension import dim_bounds, dim_exact, subdim
from .embedding import format_embedding, unit_distance_embed, verify_embedding
from .errors import CapExceeded, DomainError, ParseError
from .inputs import load_input
from .verify import SUITE_NAMES, run_suite

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_IO = 4


def _vertices(mask: int) -> list[int]:
    return bits_of(mask)


def _subdim_entry(g) -> dict:
    cert = subdim(g, g.vertex_mask)
    replay = max_degree_within(g, cert.witness_min)
    return {
        "value": cert.value,
        "witness_min": _vertices(cert.witness_min),
        "host_size": cert.host_size,
        "replay": {"witness_max_degree": replay, "ok": replay == cert.value},
    }


def _dim_entry(g, cap) -> dict:
    cert = dim_exact(g, cap=cap)
    entry = {"value": cert.value, "witness_max": _vertices(cert.witness_max)}
    if cert.inner is not None:
        inner_replay = max_degree_within(g, cert.inner.witness_min)
        recomputed = subdim(g, cert.witness_max).value
        entry["inner"] = {
            "value": cert.inner.value,
            "witness_min": _vertices(cert.inner.witness_min),
            "host_size": cert.inner.host_size,
        }
        entry["replay"] = {
            "witness_max_degree": inner_replay,
            "subdim_of_witness_max": recomputed,
            "ok": inner_replay == cert.value and recomputed == cert.value,
        }
    return entry


def _chi_entry(g, cap) -> dict:
    k, col = chromatic_number(g, cap=cap)
    return {
        "value": k,
        "colors": list(col.colors),
        "replay": {"proper": is_proper(g, col.colors),
                   "palette_size": col.palette_size,
                   "ok": is_proper(g, col.colors) and col.palette_size == k},
    }


def _decomposition_entry(g, cap) -> dict:
    col, trace = decomposition_coloring(g, cap=cap)
    return {
        "palette_size": col.palette_size,
        "colors": list(col.colors),
        "rounds": [
            {"chunk": _vertices(r.chunk), "chunk_delta": r.chunk_delta,
             "palette_offset": r.palette_offset}
            for r in trace.rounds
        ],
        "replay": {"proper": is_proper(g, col.colors)},
    }


def _embedding_entry(g, cap) -> dict:
    _, col = chromatic_number(g, cap=cap)
    emb = unit_distance_embed(g, col)
    report = verify_embedding(g, emb)
    return {
        "ambient_dim": report.ambient_dim,
        "max_edge_error": report.max_edge_error,
        "min_pair_distance": (None if report.min_pair_distance == float("inf")
                              else report.min_pair_distance),
        "ok": report.ok,
    }


def cmd_compute(spec: str, which: str, cap: int | None = None) -> dict:
    g, descriptor = load_input(spec)
    report = dict(descriptor)
    report["graph"] = {"n": g.n, "edges": g.edge_count(), "graph6": encode_graph6(g)}
    report["which"] = which
    results = {}
    if which == "subdim" or (which == "all" and g.n >= 1):
        results["subdim"] = _subdim_entry(g)
    if which in ("dim", "all"):
        results["dim"] = _dim_entry(g, cap)
    if which in ("chi", "all"):
        results["chi"] = _chi_entry(g, cap)
    if which == "all":
        lower, upper = dim_bounds(g)
        results["bounds"] = {"lower": lower, "upper": upper}
        if g.n >= 1:
            results["decomposition"] = _decomposition_entry(g, cap)
            results["embedding"] = _embedding_entry(g, cap)
    report["results"] = results
    return report


def cmd_verify(suite: str, cap: int | None = None) -> tuple[dict, int]:
    report = run_suite(suite, cap)
    return report, EXIT_OK if report["ok"] else EXIT_VIOLATION


def cmd_embed(spec: str, out_path: str, cap: int | None = None) -> dict:
    g, descriptor = load_input(spec)
    k, col = chromatic_number(g, cap=cap)
    emb = unit_distance_embed(g, col)
    report_obj = verify_embedding(g, emb)
    with open(out_path, "w", encoding="ascii") as fh:
        fh.write(format_embedding(emb, col))
    report = dict(descriptor)
    report["output"] = out_path
    report["graph"] = {"n": g.n, "edges": g.edge_count(), "graph6": encode_graph6(g)}
    report["embedding"] = {
        "ambient_dim": emb.ambient_dim,
        "palette_size": k,
        "max_edge_error": report_obj.max_edge_error,
        "min_pair_distance": (None if report_obj.min_pair_distance == float("inf")
                              else report_obj.min_pair_distance),
        "ok": report_obj.ok,
    }
    return report


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphdim",
        description="Exact induced-subgraph degree invariant solver and verifier.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute invariants of one graph")
    p_compute.add_argument("input", help="family spec (path:7, cycle:6, complete:5, "
                                         "kbip:3,4, cube:3, cayley:z:...;gens=...) or file path")
    p_compute.add_argument("--which", choices=("subdim", "dim", "chi", "all"),
                           default="all")
    p_compute.add_argument("--cap", type=int, default=None,
                           help="solver cap override (default: GRAPHDIM_CAP or 16)")

    p_verify = sub.add_parser("verify", help="run a verification sweep")
    p_verify.add_argument("suite", choices=("all",) + SUITE_NAMES + ("oracle",))
    p_verify.add_argument("--cap", type=int, default=None,
                          help="max vertex count for the exhaustive sweeps (default 6)")

    p_embed = sub.add_parser("embed", help="write a unit-distance embedding file")
    p_embed.add_argument("input")
    p_embed.add_argument("-o", "--output", required=True)
    p_embed.add_argument("--cap", type=int, default=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        if args.command == "compute":
            report = cmd_compute(args.input, args.which, cap=args.cap)
            code = EXIT_OK
        elif args.command == "verify":
            report, code = cmd_verify(args.suite, cap=args.cap)
        else:
            report = cmd_embed(args.input, args.output, cap=args.cap)
            code = EXIT_OK
    except (ParseError, DomainError) as exc:
        print(f"graphdim: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"graphdim: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"graphdim: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    _emit(report)
    elapsed = time.perf_counter() - start
    print(f"graphdim: {args.command} finished in {elapsed:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
