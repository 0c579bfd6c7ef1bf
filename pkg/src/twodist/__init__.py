"""Few-distance Euclidean representations of graphs.

Any finite graph that is neither complete nor independent can be realized
as a two-distance point set in R^(n-2): vertices map to points so that two
pairs are at equal distance exactly when they are both edges or both
non-edges. Complete edge-colored graphs using p >= 2 colors likewise
become p-distance sets in R^(n-2). Embeddability is decided by the sign
of the Schoenberg functional of the squared-distance matrix; the library
finds weights where the functional vanishes by a homotopy from the
equilateral weight vector, recovers coordinates by classical
multidimensional scaling, and certifies the result numerically.
"""

from .errors import (
    ConvergenceError,
    GraphFormatError,
    NotEuclidean,
    PipelineError,
    RankExcess,
    SignError,
    TwoDistError,
    VerificationFailed,
)
from .graphs import (
    EDGE,
    NON_EDGE,
    ColoredCompleteGraph,
    Graph,
    GraphClass,
    MixedTriple,
    WeightedMatrixFamily,
    classify,
    color_partition,
    complement,
    complete_graph,
    enumerate_graphs,
    find_mixed_triple,
    graph_from_mask,
    mask_of_graph,
    parse_colored,
    parse_graph,
    render_colored,
    render_graph,
)
from .linalg import (
    Spectrum,
    affine_dimension,
    double_center,
    gram_rank,
    l1_distance,
    sum_zero_basis,
    symmetric_eigen,
)
from .representation import (
    ClassStat,
    Embedding,
    HomotopyResult,
    RepresentationResult,
    SimplexFallback,
    VerificationReport,
    build_matrix,
    embed,
    ensure_distinct,
    homotopy_root,
    mds_embed,
    pairwise_distances,
    seed_search,
    simplex_embedding,
    verify_representation,
)
from .schoenberg import (
    Embeddability,
    EmbeddabilityResult,
    SchoenbergValue,
    embeddability,
    q_value,
)
from .sweep import (
    random_colored_complete,
    run_colored_trials,
    run_plain_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "ColoredCompleteGraph",
    "ClassStat",
    "ConvergenceError",
    "EDGE",
    "Embeddability",
    "EmbeddabilityResult",
    "Embedding",
    "Graph",
    "GraphClass",
    "GraphFormatError",
    "HomotopyResult",
    "MixedTriple",
    "NON_EDGE",
    "NotEuclidean",
    "PipelineError",
    "RankExcess",
    "RepresentationResult",
    "SchoenbergValue",
    "SignError",
    "SimplexFallback",
    "Spectrum",
    "TwoDistError",
    "VerificationFailed",
    "VerificationReport",
    "WeightedMatrixFamily",
    "affine_dimension",
    "build_matrix",
    "classify",
    "color_partition",
    "complement",
    "complete_graph",
    "double_center",
    "embed",
    "embeddability",
    "ensure_distinct",
    "enumerate_graphs",
    "find_mixed_triple",
    "gram_rank",
    "graph_from_mask",
    "homotopy_root",
    "l1_distance",
    "mask_of_graph",
    "mds_embed",
    "pairwise_distances",
    "parse_colored",
    "parse_graph",
    "q_value",
    "random_colored_complete",
    "render_colored",
    "render_graph",
    "run_colored_trials",
    "run_plain_sweep",
    "seed_search",
    "simplex_embedding",
    "sum_zero_basis",
    "symmetric_eigen",
    "verify_representation",
]
