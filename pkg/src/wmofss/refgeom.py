"""Reference geometry on the unit simplex.

Structured reference points (simplex lattice, optionally a second shrunk
layer) and perpendicular distances to the lines they span. A reference line
runs from the ideal point of the normalized objective space through one
reference point; each line anchors one scalar sub-problem.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "ReferenceLine",
    "ReferenceSet",
    "generate_simplex_lattice",
    "generate_two_layer",
    "perpendicular_distance",
    "perpendicular_distance_matrix",
]

# rounding used to merge coincident points across layers
_DEDUP_DECIMALS = 12


@dataclass(frozen=True)
class ReferenceLine:
    """Ray from the ideal point through one reference point."""

    direction: np.ndarray
    id: int = 0

    def __post_init__(self):
        direction = np.asarray(self.direction, dtype=float)
        object.__setattr__(self, "direction", direction)
        if not float(np.linalg.norm(direction)) > 0.0:
            raise ValueError("reference line direction must have positive norm")


@dataclass(frozen=True)
class ReferenceSet:
    """Ordered family of reference lines.

    ``directions`` holds one line per row; row k is the line with id k.
    ``layer_params`` records the (p_outer, p_inner) division counts the set
    was generated from (0 inner divisions means a single layer).
    """

    directions: np.ndarray
    m: int
    layer_params: tuple[int, int]

    def __len__(self) -> int:
        return int(self.directions.shape[0])

    def line(self, k: int) -> ReferenceLine:
        return ReferenceLine(direction=self.directions[k], id=k)

    @property
    def lines(self) -> list[ReferenceLine]:
        return [self.line(k) for k in range(len(self))]


@lru_cache(maxsize=None)
def _compositions(m: int, p: int) -> np.ndarray:
    """Integer compositions of p into m nonnegative parts, rows in
    lexicographic descending order. Cached and frozen; callers copy."""
    if m == 1:
        out = np.array([[p]], dtype=np.int64)
    else:
        blocks = []
        for lead in range(p, -1, -1):
            rest = _compositions(m - 1, p - lead)
            block = np.empty((rest.shape[0], m), dtype=np.int64)
            block[:, 0] = lead
            block[:, 1:] = rest
            blocks.append(block)
        out = np.vstack(blocks)
    out.setflags(write=False)
    return out


def generate_simplex_lattice(m: int, p: int) -> np.ndarray:
    """All points on the unit simplex whose coordinates are multiples of 1/p.

    Each point is one composition of p into m nonnegative parts scaled by
    1/p, so exactly C(p+m-1, m-1) points come out. Rows are ordered
    lexicographically descending, which keeps ids stable across calls.

    Args:
        m: number of objectives (simplex dimension + 1), at least 2.
        p: number of divisions per axis, at least 1.

    Returns:
        Array of shape (C(p+m-1, m-1), m); each row sums to 1.
    """
    if m < 2:
        raise ValueError(f"objective count m must be >= 2, got {m}")
    if p < 1:
        raise ValueError(f"division count p must be >= 1, got {p}")
    return _compositions(m, p).astype(float) / p


def generate_two_layer(m: int, p_outer: int, p_inner: int = 0) -> ReferenceSet:
    """Build a reference set from an outer lattice plus an optional inner layer.

    Inner-layer points are the p_inner lattice shrunk halfway toward the
    simplex centroid, w <- (w + 1/m) / 2, which keeps them on the simplex.
    Coincident points are merged; the surviving points, ordered
    lexicographically descending, become the reference lines (direction =
    point coordinates).
    """
    if p_inner < 0:
        raise ValueError(f"inner division count must be >= 0, got {p_inner}")
    points = generate_simplex_lattice(m, p_outer)
    if p_inner > 0:
        inner = (generate_simplex_lattice(m, p_inner) + 1.0 / m) / 2.0
        points = np.vstack([points, inner])
    _, keep = np.unique(np.round(points, _DEDUP_DECIMALS), axis=0, return_index=True)
    points = points[np.sort(keep)]
    order = np.lexsort(points.T[::-1])[::-1]
    return ReferenceSet(directions=points[order], m=m, layer_params=(p_outer, p_inner))


def perpendicular_distance(w, line: ReferenceLine) -> float:
    """Distance from w to its orthogonal projection onto the reference line."""
    w = np.asarray(w, dtype=float)
    direction = line.direction
    if w.shape != direction.shape:
        raise ValueError(
            f"dimension mismatch: point has {w.shape[0]} coordinates, "
            f"line direction has {direction.shape[0]}"
        )
    unit = direction / np.linalg.norm(direction)
    return float(np.linalg.norm(w - (w @ unit) * unit))


def perpendicular_distance_matrix(points: np.ndarray, directions: np.ndarray) -> np.ndarray:
    """Point-to-line distances for every (point, direction) pair.

    Uses ||w||^2 - (w . unit)^2 instead of forming residual vectors, so the
    full matrix costs one matmul. Shape (len(points), len(directions)).
    """
    points = np.asarray(points, dtype=float)
    directions = np.asarray(directions, dtype=float)
    units = directions / np.linalg.norm(directions, axis=1, keepdims=True)
    proj = points @ units.T
    sq = np.einsum("ij,ij->i", points, points)[:, None] - proj * proj
    return np.sqrt(np.maximum(sq, 0.0))
