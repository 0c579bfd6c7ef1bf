"""Graph and colored-graph data model.

Graphs are stored densely: a vertex count plus a symmetric boolean
adjacency matrix. Complete edge-colored graphs carry an integer color on
every unordered pair. All values are immutable after construction (the
backing arrays are marked read-only), so they are safe to share between
concurrent workers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Union

import numpy as np

from .errors import GraphFormatError

MAX_VERTICES = 64

EDGE = "edge"
NON_EDGE = "nonedge"

PairLabel = Union[str, int]


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple loopless graph on vertices 0..n-1."""

    n: int
    adj: np.ndarray

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        adj = np.array(self.adj, dtype=bool)
        if adj.shape != (self.n, self.n):
            raise ValueError(f"adjacency shape {adj.shape} does not match n={self.n}")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency matrix must be symmetric")
        if adj.diagonal().any():
            raise ValueError("self-loops are not allowed")
        object.__setattr__(self, "adj", _freeze(adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u, v] = adj[v, u] = True
        return cls(n, adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in itertools.combinations(range(self.n), 2) if self.adj[u, v]]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])


@dataclass(frozen=True, eq=False)
class ColoredCompleteGraph:
    """Complete graph with an integer color on every unordered vertex pair.

    The diagonal of `color` is ignored. `palette` is the ascending list of
    distinct colors actually used on pairs; its length is the number of
    distance classes the graph requires.
    """

    n: int
    color: np.ndarray
    palette: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if not 2 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 2..{MAX_VERTICES}, got {self.n}")
        color = np.array(self.color, dtype=np.int64)
        if color.shape != (self.n, self.n):
            raise ValueError(f"color matrix shape {color.shape} does not match n={self.n}")
        if not np.array_equal(color, color.T):
            raise ValueError("color matrix must be symmetric")
        off = color[~np.eye(self.n, dtype=bool)]
        object.__setattr__(self, "color", _freeze(color))
        object.__setattr__(self, "palette", tuple(sorted({int(c) for c in off})))

    @property
    def p(self) -> int:
        return len(self.palette)

    def pairs(self) -> list[tuple[int, int, int]]:
        return [
            (u, v, int(self.color[u, v]))
            for u, v in itertools.combinations(range(self.n), 2)
        ]


GraphLike = Union[Graph, ColoredCompleteGraph]


class GraphClass(Enum):
    COMPLETE = "complete"
    INDEPENDENT = "independent"
    MIXED = "mixed"


def classify(g: Graph) -> GraphClass:
    """Complete, independent, or mixed (at least one edge and one non-edge).

    A single-vertex graph counts as complete.
    """
    pairs = g.n * (g.n - 1) // 2
    edges = int(g.adj.sum()) // 2
    if edges == pairs:
        return GraphClass.COMPLETE
    if edges == 0:
        return GraphClass.INDEPENDENT
    return GraphClass.MIXED


def complement(g: Graph) -> Graph:
    """Swap edges and non-edges on all off-diagonal pairs."""
    adj = ~g.adj
    np.fill_diagonal(adj, False)
    return Graph(g.n, adj)


def complete_graph(n: int) -> Graph:
    adj = np.ones((n, n), dtype=bool)
    np.fill_diagonal(adj, False)
    return Graph(n, adj)


@dataclass(frozen=True)
class MixedTriple:
    """Three vertices whose pairs do not all share one status or color.

    `pair_labels` holds the labels of pairs (u,v), (u,w), (v,w) where
    vertices = (u, v, w). For plain graphs, kind is "H" (two edges, one
    non-edge) or "K" (one edge, two non-edges); for colored graphs it is
    "colored".
    """

    vertices: tuple[int, int, int]
    kind: str
    pair_labels: tuple[PairLabel, PairLabel, PairLabel]

    def __post_init__(self):
        u, v, w = self.vertices
        if len({u, v, w}) != 3:
            raise ValueError("triple vertices must be distinct")
        if len(set(self.pair_labels)) < 2:
            raise ValueError("triple is monochromatic, not mixed")

    def odd_label(self) -> PairLabel:
        """The label to stretch when forcing a triangle-inequality violation.

        When one label appears exactly once it is the odd one out; when all
        three labels differ the largest is chosen (any choice works).
        """
        a, b, c = self.pair_labels
        if a == b:
            return c
        if a == c:
            return b
        if b == c:
            return a
        return max(self.pair_labels)  # type: ignore[type-var]


def _pair_label(source: GraphLike, u: int, v: int) -> PairLabel:
    if isinstance(source, Graph):
        return EDGE if source.adj[u, v] else NON_EDGE
    return int(source.color[u, v])


def find_mixed_triple(source: GraphLike) -> MixedTriple | None:
    """Lexicographically smallest vertex triple that is not monochromatic.

    Returns None when every triple is monochromatic (in particular for
    n < 3, complete graphs, independent graphs, and one-color colorings).
    """
    for u, v, w in itertools.combinations(range(source.n), 3):
        labels = (_pair_label(source, u, v), _pair_label(source, u, w), _pair_label(source, v, w))
        if len(set(labels)) < 2:
            continue
        if isinstance(source, Graph):
            kind = "H" if labels.count(EDGE) == 2 else "K"
        else:
            kind = "colored"
        return MixedTriple((u, v, w), kind, labels)
    return None


@dataclass(frozen=True, eq=False)
class WeightedMatrixFamily:
    """Disjoint 0/1 pair-class matrices summing to all-ones-minus-identity.

    One class per distance label; weighting the classes with positive reals
    produces a candidate squared-distance matrix.
    """

    n: int
    classes: tuple[np.ndarray, ...]
    labels: tuple[PairLabel, ...]

    def __post_init__(self):
        if len(self.classes) != len(self.labels) or not self.classes:
            raise ValueError("need at least one class, one label per class")
        total = np.zeros((self.n, self.n))
        frozen = []
        for c in self.classes:
            c = np.array(c, dtype=float)
            if c.shape != (self.n, self.n):
                raise ValueError("class matrix has wrong shape")
            if not np.array_equal(c, c.T) or c.diagonal().any():
                raise ValueError("class matrices must be symmetric with zero diagonal")
            if not np.isin(c, (0.0, 1.0)).all():
                raise ValueError("class matrices must be 0/1")
            if not c.any():
                raise ValueError("empty class matrices must be dropped")
            total += c
            frozen.append(_freeze(c))
        expected = np.ones((self.n, self.n)) - np.eye(self.n)
        if not np.array_equal(total, expected):
            raise ValueError("classes must have disjoint supports covering all pairs")
        object.__setattr__(self, "classes", tuple(frozen))

    @property
    def p(self) -> int:
        return len(self.classes)

    def support_sizes(self) -> tuple[int, ...]:
        return tuple(int(c.sum()) // 2 for c in self.classes)


def color_partition(source: GraphLike) -> WeightedMatrixFamily:
    """Split the pair set into per-label 0/1 matrices; empty classes are dropped.

    Plain graphs yield the edge class then the non-edge class; colored
    graphs yield one class per palette color, ascending.
    """
    if source.n < 2:
        raise ValueError("a single vertex has no pairs to partition")
    if isinstance(source, Graph):
        candidates: list[tuple[PairLabel, np.ndarray]] = [
            (EDGE, source.adj.astype(float)),
            (NON_EDGE, complement(source).adj.astype(float)),
        ]
    else:
        off = ~np.eye(source.n, dtype=bool)
        candidates = [
            (c, ((source.color == c) & off).astype(float)) for c in source.palette
        ]
    kept = [(lab, m) for lab, m in candidates if m.any()]
    return WeightedMatrixFamily(
        source.n,
        tuple(m for _, m in kept),
        tuple(lab for lab, _ in kept),
    )


def pair_order(n: int) -> list[tuple[int, int]]:
    """Canonical bit order for adjacency masks: (0,1), (0,2), ..., (n-2,n-1)."""
    return list(itertools.combinations(range(n), 2))


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = pair_order(n)
    if not 0 <= mask < (1 << len(pairs)):
        raise ValueError(f"mask {mask} out of range for n={n}")
    adj = np.zeros((n, n), dtype=bool)
    for k, (u, v) in enumerate(pairs):
        if (mask >> k) & 1:
            adj[u, v] = adj[v, u] = True
    return Graph(n, adj)


def mask_of_graph(g: Graph) -> int:
    mask = 0
    for k, (u, v) in enumerate(pair_order(g.n)):
        if g.adj[u, v]:
            mask |= 1 << k
    return mask


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All labeled graphs on n vertices, one per adjacency mask, ascending."""
    if not 1 <= n <= 8:
        raise ValueError(f"enumeration supports 1 <= n <= 8, got {n}")
    for mask in range(1 << (n * (n - 1) // 2)):
        yield graph_from_mask(n, mask)


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((i, line))
    return out


def _parse_int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"{what} must be an integer, got {token!r}", lineno) from None


def _parse_header(lines: list[tuple[int, str]], max_n: int = MAX_VERTICES) -> int:
    if not lines:
        raise GraphFormatError("empty input")
    lineno, line = lines[0]
    tokens = line.split()
    if len(tokens) != 1:
        raise GraphFormatError("first line must hold the vertex count only", lineno)
    n = _parse_int(tokens[0], lineno, "vertex count")
    if not 1 <= n <= max_n:
        raise GraphFormatError(f"vertex count must be in 1..{max_n}, got {n}", lineno)
    return n


def _parse_endpoint(token: str, n: int, lineno: int) -> int:
    u = _parse_int(token, lineno, "vertex index")
    if not 0 <= u < n:
        raise GraphFormatError(f"vertex index {u} out of range for n={n}", lineno)
    return u


def parse_graph(text: str) -> Graph:
    """Read the plain text format: vertex count, then one "u v" edge per line.

    '#'-prefixed comment lines and blank lines are ignored; duplicate edge
    lines are idempotent.
    """
    lines = _content_lines(text)
    n = _parse_header(lines)
    adj = np.zeros((n, n), dtype=bool)
    for lineno, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        u = _parse_endpoint(tokens[0], n, lineno)
        v = _parse_endpoint(tokens[1], n, lineno)
        if u == v:
            raise GraphFormatError(f"self-loop '{u} {u}' is not allowed", lineno)
        adj[u, v] = adj[v, u] = True
    return Graph(n, adj)


def parse_colored(text: str) -> ColoredCompleteGraph:
    """Read the colored format: vertex count, then "u v c" for every pair.

    Every unordered pair must be covered exactly once (consistent duplicates
    are tolerated, conflicting ones rejected).
    """
    lines = _content_lines(text)
    n = _parse_header(lines)
    if n < 2:
        raise GraphFormatError("a colored complete graph needs at least 2 vertices", lines[0][0])
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    for lineno, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 3:
            raise GraphFormatError(f"expected 'u v c', got {line!r}", lineno)
        u = _parse_endpoint(tokens[0], n, lineno)
        v = _parse_endpoint(tokens[1], n, lineno)
        c = _parse_int(tokens[2], lineno, "color id")
        if u == v:
            raise GraphFormatError(f"self-loop '{u} {u}' is not allowed", lineno)
        key = (min(u, v), max(u, v))
        if key in seen and seen[key][0] != c:
            raise GraphFormatError(
                f"pair ({key[0]}, {key[1]}) recolored from {seen[key][0]} to {c} "
                f"(first given on line {seen[key][1]})",
                lineno,
            )
        seen[key] = (c, lineno)
    for u, v in itertools.combinations(range(n), 2):
        if (u, v) not in seen:
            raise GraphFormatError(f"pair ({u}, {v}) missing")
    color = np.zeros((n, n), dtype=np.int64)
    for (u, v), (c, _) in seen.items():
        color[u, v] = color[v, u] = c
    return ColoredCompleteGraph(n, color)


def render_graph(g: Graph) -> str:
    """Canonical text form; parse_graph(render_graph(g)) reproduces g."""
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def render_colored(cg: ColoredCompleteGraph) -> str:
    lines = [str(cg.n)]
    lines += [f"{u} {v} {c}" for u, v, c in cg.pairs()]
    return "\n".join(lines) + "\n"
