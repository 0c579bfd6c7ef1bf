"""Exception types shared across the package."""

from __future__ import annotations


class TwoDistError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(TwoDistError):
    """Malformed graph, colored-graph, matrix, or coordinate input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConvergenceError(TwoDistError):
    """The eigensolver failed to converge (pathological input)."""


class NotEuclidean(TwoDistError):
    """A squared-distance matrix has a Gram eigenvalue below the tolerance floor."""

    def __init__(self, min_eigenvalue: float, floor: float):
        self.min_eigenvalue = min_eigenvalue
        self.floor = floor
        super().__init__(
            f"not a Euclidean squared-distance matrix: "
            f"Gram eigenvalue {min_eigenvalue:.6g} below floor {floor:.6g}"
        )


class RankExcess(TwoDistError):
    """The Gram matrix has more significant positive eigenvalues than the target dimension."""

    def __init__(self, rank: int, target_dim: int):
        self.rank = rank
        self.target_dim = target_dim
        super().__init__(f"positive rank {rank} exceeds target dimension {target_dim}")


class SignError(TwoDistError):
    """Homotopy endpoints do not bracket a sign change."""


class VerificationFailed(TwoDistError):
    """A constructed object failed its numeric certification."""


class PipelineError(TwoDistError):
    """A stage of the embedding pipeline failed.

    Carries the stage name and the homotopy trace collected so far, for
    diagnosis.
    """

    def __init__(self, stage: str, q_trace: tuple, cause: Exception):
        self.stage = stage
        self.q_trace = q_trace
        self.cause = cause
        super().__init__(f"stage '{stage}' failed: {cause}")
