"""Exhaustive and sampled embedding sweeps over small graphs.

Drives the pipeline over every mixed labeled graph up to n = 6 (masks in
ascending order), over uniform samples for n = 7, and over seeded random
colored complete graphs; collects the worst-case certification metrics.
Shared by the CLI, the test suite, and the scripts.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

import numpy as np

from .errors import PipelineError
from .graphs import ColoredCompleteGraph, Graph, graph_from_mask, mask_of_graph
from .representation import RepresentationResult, embed

EXHAUSTIVE_MAX_N = 6


@dataclass
class SweepRow:
    n: int
    graphs: int
    max_abs_q_at_root: float = 0.0
    max_gram_negativity: float = 0.0
    max_spread: float = 0.0
    min_separation: float = float("inf")
    max_affine_dim: int = 0
    dims_agree: bool = True
    runtime_s: float = 0.0


@dataclass
class SweepFailure:
    n: int
    mask: int
    message: str


@dataclass
class SweepResult:
    rows: list[SweepRow] = field(default_factory=list)
    failures: list[SweepFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _check_result(result: RepresentationResult, row: SweepRow) -> str | None:
    """Fold one pipeline result into the row; return a message on violation."""
    n = result.source.n
    report = result.report
    lengths = result.homotopy.final_lengths
    if len(set(lengths)) != len(lengths) or min(lengths) <= 0:
        return f"final lengths {lengths} not positive and pairwise distinct"
    if not report.passed:
        return f"certification failed: {list(report.violations)}"
    if report.affine_dim_cm > n - 2 or report.affine_dim_gram > n - 2:
        return (
            f"affine dimension too high: cm={report.affine_dim_cm} "
            f"gram={report.affine_dim_gram} max={n - 2}"
        )
    row.max_abs_q_at_root = max(row.max_abs_q_at_root, abs(result.homotopy.q_at_tau))
    row.max_gram_negativity = max(row.max_gram_negativity, max(0.0, -report.gram_floor))
    row.max_spread = max(row.max_spread, report.max_spread)
    row.min_separation = min(row.min_separation, report.min_separation)
    row.max_affine_dim = max(row.max_affine_dim, report.affine_dim_cm)
    if report.affine_dim_cm != report.affine_dim_gram:
        row.dims_agree = False
    return None


def _sweep_one(g: Graph, row: SweepRow, result: SweepResult) -> None:
    mask = mask_of_graph(g)
    try:
        outcome = embed(g)
    except PipelineError as exc:
        result.failures.append(SweepFailure(g.n, mask, str(exc)))
        return
    if not isinstance(outcome, RepresentationResult):
        return  # complete/independent masks are filtered out before this point
    message = _check_result(outcome, row)
    if message is not None:
        result.failures.append(SweepFailure(g.n, mask, message))
    else:
        row.graphs += 1


def run_plain_sweep(max_n: int = 6, sample: int = 1000, seed: int = 0) -> SweepResult:
    """Embed all mixed labeled graphs for 3 <= n <= min(max_n, 6).

    For max_n = 7 an additional row embeds `sample` graphs drawn uniformly
    from all 2^21 adjacency masks with the given seed. Any single-graph
    failure is recorded with its adjacency mask.
    """
    if not 3 <= max_n <= 7:
        raise ValueError(f"max_n must be in 3..7, got {max_n}")
    result = SweepResult()
    for n in range(3, min(max_n, EXHAUSTIVE_MAX_N) + 1):
        row = SweepRow(n=n, graphs=0)
        start = time.perf_counter()
        full = (1 << (n * (n - 1) // 2)) - 1
        for mask in range(full + 1):
            if mask == 0 or mask == full:
                continue  # the only non-mixed masks
            _sweep_one(graph_from_mask(n, mask), row, result)
        row.runtime_s = time.perf_counter() - start
        result.rows.append(row)
    if max_n == 7:
        rng = np.random.default_rng(seed)
        row = SweepRow(n=7, graphs=0)
        start = time.perf_counter()
        full = (1 << 21) - 1
        for mask in rng.integers(0, full + 1, size=sample):
            mask = int(mask)
            if mask == 0 or mask == full:
                continue
            _sweep_one(graph_from_mask(7, mask), row, result)
        row.runtime_s = time.perf_counter() - start
        result.rows.append(row)
    return result


def random_colored_complete(rng: np.random.Generator, n: int, p: int) -> ColoredCompleteGraph:
    """Uniform random coloring of the pairs of K_n with colors 0..p-1, all used."""
    pairs = list(itertools.combinations(range(n), 2))
    if p > len(pairs):
        raise ValueError(f"cannot use {p} colors on {len(pairs)} pairs")
    colors = rng.integers(0, p, size=len(pairs))
    forced = rng.permutation(len(pairs))[:p]
    for c, k in enumerate(forced):
        colors[k] = c
    matrix = np.zeros((n, n), dtype=np.int64)
    for (u, v), c in zip(pairs, colors):
        matrix[u, v] = matrix[v, u] = int(c)
    return ColoredCompleteGraph(n, matrix)


@dataclass
class ColoredTrialsResult:
    trials: int
    row: SweepRow
    failures: list[SweepFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_colored_trials(
    trials: int = 500,
    seed: int = 0,
    n_range: tuple[int, int] = (3, 6),
    p_range: tuple[int, int] = (2, 4),
) -> ColoredTrialsResult:
    """Embed seeded random colored complete graphs and check p distinct lengths."""
    rng = np.random.default_rng(seed)
    row = SweepRow(n=0, graphs=0)
    result = ColoredTrialsResult(trials=trials, row=row)
    start = time.perf_counter()
    for _ in range(trials):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        max_p = min(p_range[1], n * (n - 1) // 2)
        p = int(rng.integers(p_range[0], max_p + 1))
        cg = random_colored_complete(rng, n, p)
        try:
            outcome = embed(cg)
        except PipelineError as exc:
            result.failures.append(SweepFailure(n, -1, str(exc)))
            continue
        assert isinstance(outcome, RepresentationResult)
        if len(outcome.homotopy.final_lengths) != p:
            result.failures.append(
                SweepFailure(n, -1, f"expected {p} distance classes, got "
                                    f"{len(outcome.homotopy.final_lengths)}")
            )
            continue
        message = _check_result(outcome, row)
        if message is not None:
            result.failures.append(SweepFailure(n, -1, message))
        else:
            row.graphs += 1
    row.runtime_s = time.perf_counter() - start
    return result
