"""Tie-aware rank statistics and order-comparison relations between score vectors.

Ranks are ascending (smallest score gets rank 1) with tied entries sharing
the mean of the positions they occupy.  Two entries tie when their values
are within `tie_tol`, closed transitively over the sorted order so grouping
does not depend on evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph_core import _frozen

DEFAULT_TIE_TOL = 1e-9


def _values(x) -> np.ndarray:
    v = np.asarray(getattr(x, "values", x), dtype=float)
    if v.ndim != 1:
        raise ValueError(f"expected a 1-d score vector, got shape {v.shape}")
    if not np.isfinite(v).all():
        raise ValueError("scores must be finite")
    return v


@dataclass(frozen=True, eq=False)
class RankStatistic:
    ranks: np.ndarray
    tie_tolerance: float

    def __post_init__(self):
        object.__setattr__(self, "ranks", _frozen(self.ranks))

    def __eq__(self, other):
        if not isinstance(other, RankStatistic):
            return NotImplemented
        return self.ranks.shape == other.ranks.shape and bool(
            (self.ranks == other.ranks).all()
        )


def _tie_groups(v: np.ndarray, tie_tol: float) -> tuple[np.ndarray, list[tuple[int, int]]]:
    """Stable ascending order plus [start, stop) spans of tolerance-chained groups."""
    order = np.argsort(v, kind="stable")
    sv = v[order]
    groups = []
    i = 0
    n = len(v)
    while i < n:
        j = i
        while j + 1 < n and sv[j + 1] - sv[j] <= tie_tol:
            j += 1
        groups.append((i, j + 1))
        i = j + 1
    return order, groups


def rank_statistic(scores, tie_tol: float = DEFAULT_TIE_TOL) -> RankStatistic:
    """Average-tie ascending ranks of a score vector."""
    v = _values(scores)
    order, groups = _tie_groups(v, tie_tol)
    ranks = np.empty(len(v))
    for start, stop in groups:
        # positions are 1-based; tied entries share the mean position
        ranks[order[start:stop]] = (start + stop + 1) / 2.0
    return RankStatistic(ranks, tie_tol)


def is_finer(x, y, tie_tol: float = DEFAULT_TIE_TOL) -> bool:
    """True when x's ordering refines y's.

    Every ordered pair must satisfy: rank(x)_i <= rank(x)_j implies
    rank(y)_i <= rank(y)_j.  Equivalently x may break y's ties but never
    contradicts y, and ties in x force ties in y.  Evaluated in O(n log n):
    within each x-tie-group all y-ranks must coincide, and the group y-ranks
    must be non-decreasing in x order.
    """
    vx, vy = _values(x), _values(y)
    if vx.shape != vy.shape:
        raise ValueError(f"length mismatch: {vx.shape[0]} vs {vy.shape[0]}")
    ry = rank_statistic(vy, tie_tol).ranks
    order, groups = _tie_groups(vx, tie_tol)
    prev = -np.inf
    for start, stop in groups:
        group_ry = ry[order[start:stop]]
        if (group_ry != group_ry[0]).any():
            return False
        if group_ry[0] < prev:
            return False
        prev = group_ry[0]
    return True


def is_identical_rank(x, y, tie_tol: float = DEFAULT_TIE_TOL) -> bool:
    """True when each vector's ranking refines the other (equal rank vectors)."""
    return is_finer(x, y, tie_tol) and is_finer(y, x, tie_tol)


def agreement_count(x, y, tie_tol: float = DEFAULT_TIE_TOL) -> int:
    """Number of positions whose average-tie ranks coincide exactly."""
    vx, vy = _values(x), _values(y)
    if vx.shape != vy.shape:
        raise ValueError(f"length mismatch: {vx.shape[0]} vs {vy.shape[0]}")
    rx = rank_statistic(vx, tie_tol).ranks
    ry = rank_statistic(vy, tie_tol).ranks
    return int((rx == ry).sum())
