"""Command-line surface.

Subcommands: `embed` a graph file as a few-distance point set, `qvalue` a
squared-distance matrix, `check` coordinates against a graph, `sweep`
small graphs exhaustively, and `simplex` for regular-simplex coordinates.
Machine-readable output is JSON with deterministic formatting: sorted
keys and floats at 17 significant digits, so identical inputs produce
byte-identical output. Diagnostics go to stderr only.

Exit codes: 0 success, 1 error, 2 simplex fallback.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from .errors import GraphFormatError, PipelineError, TwoDistError
from .graphs import ColoredCompleteGraph, Graph, GraphLike, parse_colored, parse_graph
from .linalg import affine_dimension
from .representation import (
    Embedding,
    RepresentationResult,
    SimplexFallback,
    VerificationReport,
    embed,
    pairwise_distances,
    simplex_embedding,
    verify_representation,
)
from .schoenberg import embeddability
from .sweep import run_plain_sweep

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FALLBACK = 2


def _format_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError("cannot serialize non-finite float")
    return format(x, ".17g")


def canonical_json(value) -> str:
    """Deterministic JSON: sorted keys, floats at 17 significant digits."""
    pieces: list[str] = []
    _write_json(value, pieces)
    return "".join(pieces)


def _write_json(value, out: list[str]) -> None:
    if value is None or isinstance(value, (str, bool)):
        out.append(json.dumps(value))
    elif isinstance(value, float):
        out.append(_format_float(value))
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, dict):
        out.append("{")
        for k, key in enumerate(sorted(value)):
            if k:
                out.append(", ")
            out.append(json.dumps(key))
            out.append(": ")
            _write_json(value[key], out)
        out.append("}")
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for k, item in enumerate(value):
            if k:
                out.append(", ")
            _write_json(item, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def _input_doc(source: GraphLike) -> dict:
    if isinstance(source, Graph):
        return {
            "kind": "graph",
            "n": source.n,
            "edges": [[u, v] for u, v in source.edges()],
        }
    return {
        "kind": "colored",
        "n": source.n,
        "p": source.p,
        "palette": list(source.palette),
        "pairs": [[u, v, c] for u, v, c in source.pairs()],
    }


def _report_doc(report: VerificationReport) -> dict:
    return {
        "passed": report.passed,
        "class_stats": [
            {
                "label": s.label,
                "count": s.count,
                "mean": s.mean,
                "min": s.min,
                "max": s.max,
                "spread": s.spread,
            }
            for s in report.class_stats
        ],
        "max_spread": report.max_spread,
        "min_separation": (
            None if math.isinf(report.min_separation) else report.min_separation
        ),
        "gram_floor": report.gram_floor,
        "affine_dimension": {
            "cayley_menger": report.affine_dim_cm,
            "gram_rank": report.affine_dim_gram,
        },
        "dimension_ok": report.dimension_ok,
        "violations": [_violation_doc(v) for v in report.violations],
    }


def _violation_doc(v: dict) -> dict:
    out = {}
    for key, val in v.items():
        if isinstance(val, tuple):
            out[key] = list(val)
        else:
            out[key] = val
    return out


def _embedding_doc(emb: Embedding) -> dict:
    return {
        "dim": emb.dim,
        "coordinates": [[float(x) for x in row] for row in emb.coords],
    }


def _result_doc(source: GraphLike, outcome) -> dict:
    if isinstance(outcome, SimplexFallback):
        return {
            "status": "fallback",
            "note": outcome.note,
            "reason": outcome.reason,
            "input": _input_doc(source),
            "pipeline": None,
            "embedding": _embedding_doc(outcome.embedding),
            "certification": _report_doc(outcome.embedding.report),
        }
    assert isinstance(outcome, RepresentationResult)
    h = outcome.homotopy
    return {
        "status": "ok",
        "input": _input_doc(source),
        "pipeline": {
            "classes": list(outcome.family.labels),
            "mixed_triple": {
                "vertices": list(outcome.triple.vertices),
                "kind": outcome.triple.kind,
            },
            "seed_weights": list(h.seed_weights),
            "tau": h.tau,
            "final_weights": list(h.final_weights),
            "final_lengths": list(h.final_lengths),
            "q_at_root": h.q_at_tau,
        },
        "embedding": _embedding_doc(outcome.embedding),
        "certification": _report_doc(outcome.report),
    }


def _error_doc(stage: str, message: str, q_trace=()) -> dict:
    return {
        "status": "error",
        "stage": stage,
        "message": message,
        "q_trace": [[t, q] for t, q in q_trace],
    }


def _emit(doc: dict, json_out: str | None) -> None:
    text = canonical_json(doc) + "\n"
    sys.stdout.write(text)
    if json_out:
        with open(json_out, "w") as fh:
            fh.write(text)


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _parse_source(path: str, colored: bool) -> GraphLike:
    text = _read_text(path)
    return parse_colored(text) if colored else parse_graph(text)


def cmd_embed(args) -> int:
    try:
        source = _parse_source(args.path, args.colored)
    except (OSError, GraphFormatError) as exc:
        _emit(_error_doc("parse", str(exc)), args.json_out)
        return EXIT_ERROR
    try:
        outcome = embed(source, tol=args.tol, rel_tol=args.rel_tol)
    except PipelineError as exc:
        _emit(_error_doc(exc.stage, str(exc.cause), exc.q_trace), args.json_out)
        return EXIT_ERROR
    _emit(_result_doc(source, outcome), args.json_out)
    return EXIT_FALLBACK if isinstance(outcome, SimplexFallback) else EXIT_OK


def _parse_matrix(text: str) -> np.ndarray:
    rows = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append([float(tok) for tok in line.split()])
        except ValueError:
            raise GraphFormatError(f"matrix row is not numeric: {line!r}", lineno) from None
    if not rows:
        raise GraphFormatError("empty matrix input")
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise GraphFormatError(f"matrix must be square with {n} entries per row")
    return np.array(rows)


def cmd_qvalue(args) -> int:
    try:
        m = _parse_matrix(_read_text(args.path))
        result = embeddability(m)
    except (OSError, GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(_format_float(result.value.q))
    print(result.kind.value)
    return EXIT_OK


def _parse_coords(text: str) -> np.ndarray:
    rows = []
    for record in csv.reader(io.StringIO(text)):
        if not record or all(not cell.strip() for cell in record):
            continue
        try:
            rows.append([float(cell) for cell in record])
        except ValueError:
            raise GraphFormatError(f"coordinate row is not numeric: {record!r}") from None
    if not rows:
        raise GraphFormatError("empty coordinates input")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise GraphFormatError("coordinate rows have inconsistent dimensions")
    return np.array(rows)


def cmd_check(args) -> int:
    try:
        source = _parse_source(args.graph, args.colored)
        coords = _parse_coords(_read_text(args.coords))
        if coords.shape[0] != source.n:
            raise GraphFormatError(
                f"coordinate count {coords.shape[0]} does not match n={source.n}"
            )
        emb = Embedding(
            dim=coords.shape[1],
            coords=coords,
            achieved=pairwise_distances(coords),
            report=None,
        )
        report = verify_representation(source, emb, args.rel_tol)
    except (OSError, GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    _emit(_report_doc(report), None)
    return EXIT_OK if report.passed else EXIT_ERROR


def cmd_sweep(args) -> int:
    if not 3 <= args.max_n <= 7:
        print(f"error: --max-n must be in 3..7, got {args.max_n}", file=sys.stderr)
        return EXIT_ERROR
    try:
        result = run_plain_sweep(max_n=args.max_n, sample=args.sample, seed=args.seed)
    except TwoDistError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    header = (
        f"{'n':>2} {'graphs':>7} {'max|q(tau)|':>12} {'gram_neg':>12} "
        f"{'max_spread':>12} {'min_sep':>12} {'time_s':>8}"
    )
    print(header)
    for row in result.rows:
        sep = "-" if math.isinf(row.min_separation) else f"{row.min_separation:.3e}"
        print(
            f"{row.n:>2} {row.graphs:>7} {row.max_abs_q_at_root:>12.3e} "
            f"{row.max_gram_negativity:>12.3e} {row.max_spread:>12.3e} "
            f"{sep:>12} {row.runtime_s:>8.2f}"
        )
    for failure in result.failures:
        print(
            f"FAIL n={failure.n} mask={failure.mask:#x}: {failure.message}",
            file=sys.stderr,
        )
    return EXIT_OK if result.ok else EXIT_ERROR


def cmd_simplex(args) -> int:
    try:
        emb = simplex_embedding(args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    doc = {
        "n": args.n,
        "dim": emb.dim,
        "affine_dimension": affine_dimension(np.asarray(emb.achieved) ** 2),
        "coordinates": [[float(x) for x in row] for row in emb.coords],
    }
    _emit(doc, args.json_out)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors, which this CLI reserves
    # for the simplex fallback; remap to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="twodist",
        description="Few-distance Euclidean representations of graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_embed = sub.add_parser("embed", help="embed a graph file in R^(n-2)")
    p_embed.add_argument("path", help="graph file (or colored graph with --colored)")
    p_embed.add_argument("--colored", action="store_true", help="parse as a colored complete graph")
    p_embed.add_argument("--json-out", metavar="PATH", help="also write the JSON document here")
    p_embed.add_argument("--tol", type=float, default=1e-8, help="eigenvalue/rank tolerance")
    p_embed.add_argument("--rel-tol", type=float, default=1e-6, help="certification tolerance")
    p_embed.set_defaults(func=cmd_embed)

    p_q = sub.add_parser("qvalue", help="Schoenberg functional of a matrix file")
    p_q.add_argument("path", help="whitespace-separated square matrix file")
    p_q.set_defaults(func=cmd_qvalue)

    p_check = sub.add_parser("check", help="verify coordinates against a graph")
    p_check.add_argument("graph", help="graph file")
    p_check.add_argument("coords", help="CSV file, one coordinate row per vertex")
    p_check.add_argument("--colored", action="store_true")
    p_check.add_argument("--rel-tol", type=float, default=1e-6)
    p_check.set_defaults(func=cmd_check)

    p_sweep = sub.add_parser("sweep", help="embed all mixed graphs up to a size")
    p_sweep.add_argument("--max-n", type=int, default=6, help="largest n (3..7)")
    p_sweep.add_argument("--sample", type=int, default=1000, help="sample size for n=7")
    p_sweep.add_argument("--seed", type=int, default=0, help="sampling seed for n=7")
    p_sweep.set_defaults(func=cmd_sweep)

    p_simplex = sub.add_parser("simplex", help="regular unit simplex coordinates")
    p_simplex.add_argument("-n", type=int, required=True, help="number of points (>= 1)")
    p_simplex.add_argument("--json-out", metavar="PATH")
    p_simplex.set_defaults(func=cmd_simplex)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
