"""Constructive pipeline from a graph to a few-distance point set in R^(n-2).

The route, for a graph that is neither complete nor independent (or a
colored complete graph using at least two colors):

1. partition the vertex pairs into distance classes (edge/non-edge, or one
   class per color);
2. pick squared-length seed weights that violate the triangle inequality on
   a mixed vertex triple, which pushes the Schoenberg functional positive;
3. make the seed weights pairwise distinct by a perturbation small enough,
   by the functional's l1 Lipschitz bound, to keep it positive;
4. walk the straight segment from the all-ones (equilateral) weight vector
   toward the seed and bisect on the sign of the functional until it
   vanishes;
5. recover coordinates from the resulting squared-distance matrix by
   classical multidimensional scaling, and certify the result.

Inputs that are complete, independent, or one-colored cannot fit in
R^(n-2); they get a regular unit simplex in R^(n-1) instead.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import (
    ConvergenceError,
    NotEuclidean,
    PipelineError,
    RankExcess,
    SignError,
    VerificationFailed,
)
from .graphs import (
    ColoredCompleteGraph,
    Graph,
    GraphClass,
    GraphLike,
    MixedTriple,
    WeightedMatrixFamily,
    classify,
    color_partition,
    complete_graph,
    find_mixed_triple,
)
from .linalg import (
    RANK_TOL,
    affine_dimension,
    as_squared_distances,
    double_center,
    gram_rank,
    sum_zero_basis,
    symmetric_eigen,
)
from .schoenberg import q_value

LONG_LENGTH = 3.0
SHORT_LENGTH = 1.0
SPARE_LENGTH = 2.0

BRACKET_TOL = 1e-15
Q_ROOT_TOL = 1e-12
REL_TOL = 1e-6
SEPARATION_FACTOR = 10.0


@dataclass(frozen=True)
class HomotopyResult:
    """Root of the functional along the segment from all-ones weights to the seed.

    Weights evolve as w_i(t) = 1 + t * (seed_i - 1); tau is the parameter
    where the functional vanishes, and q_trace records every (t, value)
    pair visited, endpoints first.
    """

    seed_weights: tuple[float, ...]
    tau: float
    final_weights: tuple[float, ...]
    final_lengths: tuple[float, ...]
    q_at_tau: float
    q_trace: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class ClassStat:
    label: object
    count: int
    mean: float
    min: float
    max: float
    spread: float


@dataclass(frozen=True, eq=False)
class VerificationReport:
    """Numeric certification of an embedding against its source graph.

    `dimension_ok` is None when the source does not require a dimension
    drop (complete/independent/one-color inputs).
    """

    passed: bool
    class_stats: tuple[ClassStat, ...]
    max_spread: float
    min_separation: float
    gram_floor: float
    affine_dim_cm: int
    affine_dim_gram: int
    dimension_ok: bool | None
    violations: tuple[dict, ...]


@dataclass(frozen=True, eq=False)
class Embedding:
    """Points in R^dim with their realized pairwise distances."""

    dim: int
    coords: np.ndarray
    achieved: np.ndarray
    report: VerificationReport | None


@dataclass(frozen=True, eq=False)
class RepresentationResult:
    source: GraphLike
    family: WeightedMatrixFamily
    triple: MixedTriple
    homotopy: HomotopyResult
    embedding: Embedding
    report: VerificationReport


@dataclass(frozen=True, eq=False)
class SimplexFallback:
    """Regular unit simplex in R^(n-1), for inputs with a single distance class."""

    embedding: Embedding
    reason: str
    note: str


EmbedOutcome = Union[RepresentationResult, SimplexFallback]


def build_matrix(family: WeightedMatrixFamily, weights) -> np.ndarray:
    """Weighted sum of the class matrices: a candidate squared-distance matrix."""
    weights = np.asarray(weights, dtype=float)
    if weights.shape != (family.p,):
        raise ValueError(f"expected {family.p} weights, got shape {weights.shape}")
    if not (weights > 0).all():
        raise ValueError("weights must be strictly positive")
    m = np.zeros((family.n, family.n))
    for w, c in zip(weights, family.classes):
        m += w * c
    return m


def seed_search(family: WeightedMatrixFamily, triple: MixedTriple) -> tuple[float, ...]:
    """Squared-length weights that make the functional strictly positive.

    The triple's odd class gets length 3 and the other classes on the
    triple get length 1, so the triple's triangle has sides (1, 1, 3) and
    violates the triangle inequality; no Euclidean point set realizes such
    distances, which forces the functional above zero. Classes absent from
    the triple get length 2 (any positive value works). The value is
    verified before returning.
    """
    label_set = set(family.labels)
    triple_labels = set(triple.pair_labels)
    if not triple_labels <= label_set:
        raise ValueError("triple labels do not match the family's classes")
    odd = triple.odd_label()
    lengths = [
        LONG_LENGTH if lab == odd else (SHORT_LENGTH if lab in triple_labels else SPARE_LENGTH)
        for lab in family.labels
    ]
    weights = tuple(length * length for length in lengths)
    q = q_value(build_matrix(family, weights)).q
    if q <= 0:
        raise VerificationFailed(
            f"seed weights {weights} violate a triangle inequality but the "
            f"functional came out {q:.6g} <= 0; this signals a numerical fault"
        )
    return weights


def _first_duplicate(values: list[float]) -> int | None:
    for j in range(1, len(values)):
        if values[j] in values[:j]:
            return j
    return None


def ensure_distinct(family: WeightedMatrixFamily, weights) -> tuple[float, ...]:
    """Make positive-functional weights pairwise distinct, keeping the functional positive.

    Bumping one class weight by delta moves the matrix by at most
    delta * 2 * (pairs in the class) in l1, hence the functional by the same
    amount (its l1 Lipschitz bound). Each duplicate is bumped by
    delta = min(q / (4 * total pairs), half the smallest gap between distinct
    values), which costs at most half the current value of the functional
    and never collides with an existing value.
    """
    w = [float(x) for x in weights]
    if len(w) != family.p:
        raise ValueError(f"expected {family.p} weights, got {len(w)}")
    total_pairs = family.n * (family.n - 1) // 2
    q = q_value(build_matrix(family, w)).q
    if q <= 0:
        raise VerificationFailed(f"precondition violated: functional is {q:.6g} <= 0")
    for _ in range(len(w)):
        j = _first_duplicate(w)
        if j is None:
            return tuple(w)
        distinct = sorted(set(w))
        gaps = [b - a for a, b in zip(distinct, distinct[1:])]
        delta = q / (4.0 * total_pairs)
        if gaps:
            delta = min(delta, min(gaps) / 2.0)
        w[j] += delta
        q = q_value(build_matrix(family, w)).q
        if q <= 0:
            raise VerificationFailed(
                f"functional lost positivity ({q:.6g}) after a budgeted perturbation"
            )
    raise VerificationFailed("could not separate duplicate weights")


def homotopy_root(
    family: WeightedMatrixFamily,
    seed_weights,
    *,
    bracket_tol: float = BRACKET_TOL,
    q_tol: float = Q_ROOT_TOL,
) -> HomotopyResult:
    """Bisection root of t -> functional of the weights 1 + t*(seed - 1).

    The all-ones endpoint codes the equilateral metric space, where the
    functional equals -1/2; the seed endpoint must be strictly positive.
    Any sign change bracket shrinks until the value is within q_tol of zero
    or the bracket is narrower than bracket_tol. Seed weights must be
    positive and pairwise distinct, which makes the final weights pairwise
    distinct too (the weight map is injective for t > 0).
    """
    seed = np.asarray(seed_weights, dtype=float)
    if seed.shape != (family.p,):
        raise ValueError(f"expected {family.p} seed weights, got shape {seed.shape}")
    if not (seed > 0).all():
        raise ValueError("seed weights must be strictly positive")
    if len(set(seed.tolist())) != family.p:
        raise ValueError("seed weights must be pairwise distinct")

    direction = seed - 1.0

    def weights_at(t: float) -> np.ndarray:
        return 1.0 + t * direction

    # The weight curve is affine, so the compressed matrix B'M(w(t))B is
    # affine in t as well; precomputing its two pieces makes each bisection
    # step one matrix add plus an eigenvalue solve. The base piece is
    # B'(J - I)B = -I since the basis is orthonormal to the all-ones vector.
    basis = sum_zero_basis(family.n)
    compressed = [basis.T @ (c @ basis) for c in family.classes]
    c_base = -np.eye(family.n - 1)
    c_dir = np.zeros((family.n - 1, family.n - 1))
    for d, c in zip(direction, compressed):
        c_dir += d * c

    def psi(t: float) -> float:
        try:
            top = np.linalg.eigvalsh(c_base + t * c_dir)[-1]
        except np.linalg.LinAlgError as exc:  # pragma: no cover
            raise ConvergenceError(f"eigenvalue solve failed at t={t}: {exc}") from exc
        return 0.5 * float(top)

    f0 = psi(0.0)
    f1 = psi(1.0)
    trace = [(0.0, f0), (1.0, f1)]
    if f0 >= 0.0:
        raise SignError(f"functional at the equilateral endpoint is {f0:.6g} >= 0")
    if f1 <= 0.0:
        raise SignError(f"functional at the seed endpoint is {f1:.6g} <= 0")

    lo, hi = 0.0, 1.0
    tau = None
    q_at_tau = None
    while hi - lo > bracket_tol:
        mid = 0.5 * (lo + hi)
        fm = psi(mid)
        trace.append((mid, fm))
        if abs(fm) <= q_tol:
            tau, q_at_tau = mid, fm
            break
        if fm < 0.0:
            lo = mid
        else:
            hi = mid
    if tau is None:
        tau = 0.5 * (lo + hi)
        q_at_tau = psi(tau)
        trace.append((tau, q_at_tau))

    final = weights_at(tau)
    if not (final > 0).all():
        raise VerificationFailed(f"final weights {final} are not all positive")
    return HomotopyResult(
        seed_weights=tuple(float(x) for x in seed),
        tau=float(tau),
        final_weights=tuple(float(x) for x in final),
        final_lengths=tuple(math.sqrt(float(x)) for x in final),
        q_at_tau=float(q_at_tau),
        q_trace=tuple(trace),
    )


def pairwise_distances(coords) -> np.ndarray:
    coords = np.asarray(coords, dtype=float)
    g = coords @ coords.T
    sq = np.diag(g)[:, None] + np.diag(g)[None, :] - 2.0 * g
    np.clip(sq, 0.0, None, out=sq)
    d = np.sqrt(sq)
    np.fill_diagonal(d, 0.0)
    return d


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def mds_embed(d2, target_dim: int, tol: float = RANK_TOL) -> Embedding:
    """Coordinates in R^target_dim realizing the given squared distances.

    Classical multidimensional scaling: eigendecompose the double-centered
    Gram matrix and scale the significant eigenvectors by the square roots
    of their eigenvalues. Eigenvalues below tol * lambda_max (including
    negative ones within tolerance) map to zero coordinates.

    Raises NotEuclidean when some Gram eigenvalue falls below
    -tol * lambda_max, and RankExcess when more than target_dim eigenvalues
    are significant.
    """
    d2 = as_squared_distances(d2)
    if target_dim < 0:
        raise ValueError("target dimension must be nonnegative")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    n = d2.shape[0]
    spectrum = symmetric_eigen(double_center(d2))
    lam = spectrum.eigenvalues
    lam_max = max(float(lam[0]), 0.0)
    if float(lam[-1]) < -tol * lam_max:
        raise NotEuclidean(min_eigenvalue=float(lam[-1]), floor=-tol * lam_max)
    rank = int((lam > tol * lam_max).sum())
    if rank > target_dim:
        raise RankExcess(rank=rank, target_dim=target_dim)
    coords = np.zeros((n, target_dim))
    if rank:
        coords[:, :rank] = spectrum.eigenvectors[:, :rank] * np.sqrt(lam[:rank])
    return Embedding(
        dim=target_dim,
        coords=_frozen(coords),
        achieved=_frozen(pairwise_distances(coords)),
        report=None,
    )


def _needs_dimension_drop(source: GraphLike) -> bool:
    if isinstance(source, Graph):
        return classify(source) is GraphClass.MIXED
    return source.p >= 2


def verify_representation(source: GraphLike, emb: Embedding, rel_tol: float = REL_TOL) -> VerificationReport:
    """Certify that an embedding realizes the source's distance classes.

    Checks that (a) within each class the achieved distances have relative
    spread at most rel_tol, (b) class mean distances are pairwise separated
    by more than 10 * rel_tol relative to the larger mean, and (c) for
    sources that require the dimension drop, the affine dimension of the
    points is at most n-2 by both the Cayley-Menger test and the Gram
    rank. Every violating pair is listed in the report.
    """
    n = source.n
    coords = np.asarray(emb.coords, dtype=float)
    if coords.ndim != 2 or coords.shape[0] != n:
        raise ValueError(f"expected {n} coordinate rows, got {coords.shape}")
    d = pairwise_distances(coords)
    d2 = d * d

    stats: list[ClassStat] = []
    violations: list[dict] = []
    if n >= 2:
        family = color_partition(source)
        for label, cls in zip(family.labels, family.classes):
            idx = np.argwhere(np.triu(cls) > 0)
            vals = d[idx[:, 0], idx[:, 1]]
            mean = float(vals.mean())
            lo, hi = float(vals.min()), float(vals.max())
            spread = (hi - lo) / mean if mean > 0 else math.inf
            stats.append(ClassStat(label, len(vals), mean, lo, hi, spread))
            if spread > rel_tol:
                for (i, j), val in zip(idx, vals):
                    if abs(float(val) - mean) > rel_tol * mean:
                        violations.append(
                            {
                                "kind": "spread",
                                "class": label,
                                "pair": (int(i), int(j)),
                                "distance": float(val),
                                "class_mean": mean,
                            }
                        )

    min_separation = math.inf
    for a in range(len(stats)):
        for b in range(a + 1, len(stats)):
            bigger = max(stats[a].mean, stats[b].mean)
            gap = abs(stats[a].mean - stats[b].mean) / bigger if bigger > 0 else 0.0
            min_separation = min(min_separation, gap)
            if gap <= SEPARATION_FACTOR * rel_tol:
                violations.append(
                    {
                        "kind": "separation",
                        "classes": (stats[a].label, stats[b].label),
                        "relative_gap": gap,
                    }
                )

    gram = double_center(d2)
    eigenvalues = np.linalg.eigvalsh(gram)
    lam_max = max(float(eigenvalues[-1]), 0.0)
    gram_floor = float(eigenvalues[0]) / lam_max if lam_max > 0 else 0.0
    affine_cm = affine_dimension(d2)
    affine_gram = gram_rank(gram)

    dimension_ok: bool | None = None
    if _needs_dimension_drop(source):
        dimension_ok = affine_cm <= n - 2 and affine_gram <= n - 2
        if not dimension_ok:
            violations.append(
                {
                    "kind": "dimension",
                    "affine_dim_cm": affine_cm,
                    "affine_dim_gram": affine_gram,
                    "required_max": n - 2,
                }
            )

    return VerificationReport(
        passed=not violations,
        class_stats=tuple(stats),
        max_spread=max((s.spread for s in stats), default=0.0),
        min_separation=min_separation,
        gram_floor=gram_floor,
        affine_dim_cm=affine_cm,
        affine_dim_gram=affine_gram,
        dimension_ok=dimension_ok,
        violations=tuple(violations),
    )


def simplex_embedding(n: int, tol: float = RANK_TOL) -> Embedding:
    """Regular unit simplex: n points in R^(n-1), all pairwise distances 1."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    d2 = np.ones((n, n)) - np.eye(n)
    emb = mds_embed(d2, max(n - 1, 0), tol)
    report = verify_representation(complete_graph(n), emb)
    return dataclasses.replace(emb, report=report)


FALLBACK_NOTE = (
    "input has a single distance class; dimension |G|-1 is necessary, "
    "so a regular unit simplex in R^(n-1) is returned"
)


def embed(
    source: GraphLike,
    *,
    tol: float = RANK_TOL,
    rel_tol: float = REL_TOL,
    q_tol: float = Q_ROOT_TOL,
    bracket_tol: float = BRACKET_TOL,
) -> EmbedOutcome:
    """Full pipeline: a certified few-distance embedding in R^(n-2), or a simplex fallback.

    Mixed graphs (and colorings with p >= 2) go through seed search,
    distinctness perturbation, homotopy root finding, multidimensional
    scaling into R^(n-2), and certification. Complete, independent, and
    one-color inputs return a SimplexFallback. Stage failures raise
    PipelineError carrying the stage name and the homotopy trace collected
    so far.
    """
    n = source.n
    if not _needs_dimension_drop(source):
        if isinstance(source, Graph):
            reason = classify(source).value
        else:
            reason = "single-color"
        return SimplexFallback(
            embedding=simplex_embedding(n, tol), reason=reason, note=FALLBACK_NOTE
        )

    trace: tuple[tuple[float, float], ...] = ()
    stage = "partition"
    try:
        family = color_partition(source)
        stage = "mixed-triple"
        triple = find_mixed_triple(source)
        if triple is None:
            raise VerificationFailed("no mixed triple found in a mixed input")
        stage = "seed-search"
        seed = seed_search(family, triple)
        stage = "ensure-distinct"
        seed = ensure_distinct(family, seed)
        stage = "homotopy"
        homotopy = homotopy_root(family, seed, bracket_tol=bracket_tol, q_tol=q_tol)
        trace = homotopy.q_trace
        stage = "final-matrix"
        matrix = build_matrix(family, homotopy.final_weights)
        stage = "mds"
        embedding = mds_embed(matrix, n - 2, tol)
        stage = "verify"
        report = verify_representation(source, embedding, rel_tol)
        if not report.passed:
            raise VerificationFailed(f"certification failed: {list(report.violations)}")
    except (NotEuclidean, RankExcess, SignError, VerificationFailed) as exc:
        raise PipelineError(stage, trace, exc) from exc

    embedding = dataclasses.replace(embedding, report=report)
    return RepresentationResult(
        source=source,
        family=family,
        triple=triple,
        homotopy=homotopy,
        embedding=embedding,
        report=report,
    )
