"""Objective normalization and PBI aggregation.

Raw objective vectors are mapped to weight vectors in [0,1]^m using running
bounds (known or estimated ideal point, running per-objective maxima as the
nadir stand-in). A weight vector is then collapsed to a single aggregated
weight with the penalty-based boundary intersection function against the
reference line of the fish's cluster; lower is better. The aggregated weight
drives the intra-cluster dominance test.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "EPS_RANGE",
    "NormalizationState",
    "PbiScore",
    "update_bounds",
    "normalize",
    "pbi",
    "pbi_aggregate",
    "theta_star_dominates",
]

# below this per-objective range, normalization maps the coordinate to 0:
# an objective no fish varies on should not influence scoring
EPS_RANGE = 1e-12


@dataclass(frozen=True)
class NormalizationState:
    """Running normalization bounds for the objective space.

    z_star is the ideal-point estimate (exact and immutable when
    ideal_known); f_max tracks per-objective maxima as the nadir
    approximation. z_star never increases and f_max never decreases across
    updates.
    """

    z_star: np.ndarray
    f_max: np.ndarray
    ideal_known: bool
    observed: bool = False

    @classmethod
    def with_known_ideal(cls, ideal) -> "NormalizationState":
        ideal = np.asarray(ideal, dtype=float)
        return cls(z_star=ideal, f_max=np.full(ideal.shape, -np.inf), ideal_known=True)

    @classmethod
    def empty(cls, m: int) -> "NormalizationState":
        return cls(z_star=np.full(m, np.inf), f_max=np.full(m, -np.inf), ideal_known=False)


def update_bounds(state: NormalizationState, fs) -> NormalizationState:
    """Fold a batch of objective vectors into the bounds.

    Returns a new state; existing snapshots stay frozen. With an empty batch
    the state is returned unchanged. Batched and sequential updates commute.
    """
    F = np.asarray(fs, dtype=float)
    if F.size == 0:
        return state
    if F.ndim == 1:
        F = F[None, :]
    if F.shape[1] != state.z_star.shape[0]:
        raise ValueError(f"expected vectors of length {state.z_star.shape[0]}, got {F.shape[1]}")
    z_star = state.z_star if state.ideal_known else np.minimum(state.z_star, F.min(axis=0))
    f_max = np.maximum(state.f_max, F.max(axis=0))
    return NormalizationState(z_star=z_star, f_max=f_max, ideal_known=state.ideal_known, observed=True)


def normalize(f, state: NormalizationState) -> np.ndarray:
    """Weight vector w with w_j = (f_j - z*_j) / (f_max_j - z*_j).

    Coordinates whose observed range is below EPS_RANGE map to 0. Accepts a
    single vector or a batch; vectors inside the current bounds land in
    [0,1]^m, candidates outside may exceed it.
    """
    if not state.observed:
        raise ValueError("normalization bounds have not observed any objective vector yet")
    F = np.asarray(f, dtype=float)
    span = state.f_max - state.z_star
    safe = span >= EPS_RANGE
    return np.where(safe, (F - state.z_star) / np.where(safe, span, 1.0), 0.0)


@dataclass(frozen=True)
class PbiScore:
    """PBI decomposition of a weight vector against one reference line.

    d1 is the distance from the ideal point to the orthogonal projection on
    the line, d2 the distance from the vector to that projection; the
    aggregated weight is g = d1 + theta * d2 exactly.
    """

    d1: float
    d2: float
    g: float
    theta: float


def pbi(w, line, theta: float) -> PbiScore:
    """Penalty-based boundary intersection score of w against a line."""
    if theta < 0:
        raise ValueError(f"theta must be nonnegative, got {theta}")
    w = np.asarray(w, dtype=float)
    direction = np.asarray(line.direction, dtype=float)
    if w.shape != direction.shape:
        raise ValueError(f"dimension mismatch: {w.shape[0]} vs {direction.shape[0]}")
    nrm = float(np.linalg.norm(direction))
    if not nrm > 0.0:
        raise ValueError("reference line direction must have positive norm")
    unit = direction / nrm
    d1 = float(abs(w @ unit))
    d2 = float(np.linalg.norm(w - d1 * unit))
    return PbiScore(d1=d1, d2=d2, g=d1 + theta * d2, theta=theta)


def pbi_aggregate(W: np.ndarray, directions: np.ndarray, theta: float) -> np.ndarray:
    """Aggregated weights for each row of W against the matching row of
    directions. Vectorized form of pbi(...).g for the whole school."""
    units = directions / np.linalg.norm(directions, axis=1, keepdims=True)
    d1 = np.abs(np.einsum("ij,ij->i", W, units))
    d2 = np.linalg.norm(W - d1[:, None] * units, axis=1)
    return d1 + theta * d2


def theta_star_dominates(cluster_a: int, w_bar_a: float, cluster_b: int, w_bar_b: float) -> bool:
    """Intra-cluster dominance: a dominates b iff both share a cluster and
    a's aggregated weight is strictly smaller."""
    return cluster_a == cluster_b and w_bar_a < w_bar_b
