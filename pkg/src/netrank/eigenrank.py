"""Ranking vectors: fixed-point eigenvectors, power iteration, and the two rankings.

The exact method finds the eigenvalue-1 eigenspace of a column-stochastic
matrix as the null space of (M - I) by Gaussian elimination with a pivot
threshold; because eigenvalue 1 of a stochastic matrix is semisimple, the
null-space dimension equals the eigenvalue's multiplicity.  The power method
iterates x_k = M x_{k-1} to the same fixed point on regular chains.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .graph_core import AdjacencyMatrix, _frozen, default_labels, patch_zero_rows
from .chain_builder import (
    TransitionMatrix,
    augment_adjacency,
    damped_transition,
    transition_from_augmented,
    transition_from_patched,
)

# Scores at or below this (including any negative score) mark a result as
# numerically degenerate: the chain was solved at an unstable parameter.
DEGENERATE_SCORE = 1e-12

SCORE_SUM_TOL = 1e-9


class MultiplicityError(Exception):
    """The eigenvalue-1 eigenspace is not one-dimensional, so no unique ranking exists."""

    def __init__(self, multiplicity: int):
        super().__init__(
            f"The multiplicity of the eigenvalue 1 is not one (got {multiplicity})"
        )
        self.multiplicity = multiplicity


class NonConvergenceError(Exception):
    """Power iteration hit max_iterations; carries the last iterate."""

    def __init__(self, last_iterate: np.ndarray, iterations: int, tolerance: float):
        super().__init__(
            f"power iteration did not reach tolerance {tolerance:g} "
            f"within {iterations} iterations"
        )
        self.last_iterate = last_iterate
        self.iterations = iterations


class DegenerateVectorError(Exception):
    """The fixed-point eigenvector sums to zero and cannot be normalized."""


@dataclass(frozen=True, eq=False)
class ScoreVector:
    """Non-negative scores summing to 1, one per labelled node.

    `degenerate` is set when any score is <= 1e-12 or negative, the signature
    of solving at an unstable parameter (the scores are still returned).
    `iterations` is filled by the power method only.
    """

    values: np.ndarray
    labels: tuple[str, ...]
    degenerate: bool = False
    iterations: Optional[int] = None

    def __post_init__(self):
        v = _frozen(self.values)
        labels = tuple(self.labels)
        if v.ndim != 1 or len(labels) != v.shape[0]:
            raise ValueError(f"{len(labels)} labels for {v.shape} values")
        if abs(v.sum() - 1.0) > SCORE_SUM_TOL:
            raise ValueError(f"scores must sum to 1, got {v.sum()!r}")
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True, eq=False)
class EigenSpace:
    """Dimension of the eigenvalue-1 eigenspace and, when it is 1, a basis vector."""

    multiplicity: int
    vector: Optional[np.ndarray]
    tolerance_used: float


@dataclass(frozen=True)
class PowerIterConfig:
    """Stopping rule for power iteration.

    Iteration stops when the max-abs successive difference drops to
    `tolerance`.  `initial` must sum to 1; None means uniform.
    """

    tolerance: float = 1e-6
    max_iterations: int = 10**6
    initial: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")


def eigenvalue_one_space(matrix: TransitionMatrix, tol: float = 1e-5) -> EigenSpace:
    """Null space of (M - I) with pivots below tol*m treated as zero.

    Gaussian elimination with partial pivoting; the threshold scales with the
    dimension to mirror how close to 1 a second eigenvalue must be before the
    ranking is reported as ill-defined.  When the nullity is 1 the basis
    vector is returned unnormalized (arbitrary sign and scale).
    """
    m = matrix.m
    threshold = tol * m
    U = matrix.entries - np.eye(m)
    pivot_rows: list[tuple[int, int]] = []
    r = 0
    for c in range(m):
        i = int(np.argmax(np.abs(U[r:, c]))) + r
        if abs(U[i, c]) <= threshold:
            continue
        if i != r:
            U[[r, i]] = U[[i, r]]
        U[r + 1 :] -= (U[r + 1 :, c] / U[r, c])[:, None] * U[r]
        pivot_rows.append((r, c))
        r += 1
    nullity = m - r
    if nullity != 1:
        return EigenSpace(nullity, None, threshold)
    pivot_cols = {c for _, c in pivot_rows}
    free = next(c for c in range(m) if c not in pivot_cols)
    x = np.zeros(m)
    x[free] = 1.0
    for row, c in reversed(pivot_rows):
        x[c] = -(U[row] @ x) / U[row, c]
    return EigenSpace(1, x, threshold)


def stationary_power(
    matrix: TransitionMatrix,
    cfg: PowerIterConfig = PowerIterConfig(),
    labels: Optional[Sequence[str]] = None,
) -> ScoreVector:
    """Iterate x_k = M x_{k-1} until successive iterates agree within tolerance.

    Raises NonConvergenceError (carrying the last iterate) if max_iterations
    is exhausted, as happens on periodic non-regular chains.
    """
    m = matrix.m
    if cfg.initial is None:
        x = np.full(m, 1.0 / m)
    else:
        x = np.asarray(cfg.initial, dtype=float)
        if x.shape != (m,):
            raise ValueError(f"initial vector has shape {x.shape}, chain has {m} states")
        if abs(x.sum() - 1.0) > SCORE_SUM_TOL:
            raise ValueError("initial vector must sum to 1")
    M = matrix.entries
    for k in range(1, cfg.max_iterations + 1):
        x_next = M @ x
        diff = np.abs(x_next - x).max()
        x = x_next
        if diff <= cfg.tolerance:
            return ScoreVector(
                x,
                tuple(labels) if labels is not None else default_labels(m),
                degenerate=bool((x <= DEGENERATE_SCORE).any()),
                iterations=k,
            )
    raise NonConvergenceError(x, cfg.max_iterations, cfg.tolerance)


def _normalize_scores(
    vector: np.ndarray, labels: tuple[str, ...], iterations: Optional[int] = None
) -> ScoreVector:
    s = vector.sum()
    if abs(s) <= 1e-12 * max(np.abs(vector).max(), 1e-300):
        raise DegenerateVectorError("degenerate eigenvector: entry sum is zero")
    scores = vector / s
    return ScoreVector(
        scores,
        labels,
        degenerate=bool((scores <= DEGENERATE_SCORE).any()),
        iterations=iterations,
    )


def _power_cfg(cfg: Optional[PowerIterConfig]) -> PowerIterConfig:
    # high-accuracy default for the ranking entry points
    return cfg if cfg is not None else PowerIterConfig(tolerance=1e-15)


def pagerank(
    adj: AdjacencyMatrix,
    alpha: float,
    method: str = "exact",
    cfg: Optional[PowerIterConfig] = None,
) -> ScoreVector:
    """Damped ranking of a directed network.

    Zero rows of the adjacency are patched to all-ones, the column-stochastic
    chain is damped by alpha toward uniform, and the scores are the normalized
    fixed-point vector of the damped chain.

    method="exact" solves the eigenvalue-1 problem directly and raises
    MultiplicityError when the eigenspace is not one-dimensional, which can
    happen only at alpha = 1 or within the pivot tolerance of it.
    method="power" iterates to the fixed point (default tolerance 1e-15)
    and raises NonConvergenceError on periodic chains.
    """
    if not 0 < alpha <= 1:
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    chain = damped_transition(transition_from_patched(patch_zero_rows(adj)), alpha)
    if method == "exact":
        space = eigenvalue_one_space(chain)
        if space.multiplicity != 1:
            raise MultiplicityError(space.multiplicity)
        return _normalize_scores(space.vector, adj.labels)
    if method == "power":
        return stationary_power(chain, _power_cfg(cfg), labels=adj.labels)
    raise ValueError(f"method must be 'exact' or 'power', got {method!r}")


def markovrank(
    adj: AdjacencyMatrix,
    epsilon: float,
    method: str = "exact",
    cfg: Optional[PowerIterConfig] = None,
) -> ScoreVector:
    """Augmented-chain ranking of a directed network.

    The patched adjacency is extended with a hub node weighted by epsilon,
    the fixed-point vector of the (n+1)-state chain is computed, the hub
    entry is dropped and the remaining n entries are renormalized.

    Methods and errors as for pagerank; MultiplicityError is possible only
    at epsilon = 0 or within the pivot tolerance of it.
    """
    if not 0 <= epsilon <= 1:
        raise ValueError(f"epsilon must be in [0, 1], got {epsilon}")
    chain = transition_from_augmented(
        augment_adjacency(patch_zero_rows(adj), epsilon)
    )
    if method == "exact":
        space = eigenvalue_one_space(chain)
        if space.multiplicity != 1:
            raise MultiplicityError(space.multiplicity)
        return _normalize_scores(space.vector[: adj.n], adj.labels)
    if method == "power":
        full = stationary_power(chain, _power_cfg(cfg))
        return _normalize_scores(
            full.values[: adj.n], adj.labels, iterations=full.iterations
        )
    raise ValueError(f"method must be 'exact' or 'power', got {method!r}")
