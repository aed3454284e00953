"""Scalable DTLZ1-4 benchmark problems.

Box-constrained minimization on [0,1]^n with n = m + k - 1: the first m-1
"position" variables select a point on the front, the trailing k "distance"
variables control how far the objective vector sits from it. All four fronts
touch the ideal point at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "FAMILIES",
    "ProblemSpec",
    "make_problem",
    "evaluate",
    "sample_true_pf",
    "front_targets",
    "ideal_point",
    "write_front_csv",
]

FAMILIES = ("dtlz1", "dtlz2", "dtlz3", "dtlz4")

# distance-variable counts recommended by the suite's authors
DEFAULT_K = {"dtlz1": 5, "dtlz2": 10, "dtlz3": 10, "dtlz4": 10}
DEFAULT_ALPHA_BIAS = 100.0


@dataclass(frozen=True)
class ProblemSpec:
    """One DTLZ instance: family, objective count m, distance-variable count k."""

    family: str
    m: int
    k: int
    alpha_bias: float = DEFAULT_ALPHA_BIAS

    @property
    def n(self) -> int:
        """Decision-space dimension, m + k - 1."""
        return self.m + self.k - 1


def make_problem(family: str, m: int, k: int | None = None, alpha_bias: float | None = None) -> ProblemSpec:
    """Build a ProblemSpec, filling in the conventional defaults.

    k defaults to 5 for DTLZ1 and 10 for DTLZ2-4; the DTLZ4 bias exponent
    defaults to 100.
    """
    family = family.lower()
    if family not in FAMILIES:
        raise ValueError(f"unknown problem family {family!r}; expected one of {FAMILIES}")
    if m < 2:
        raise ValueError(f"objective count m must be >= 2, got {m}")
    if k is None:
        k = DEFAULT_K[family]
    if k < 1:
        raise ValueError(f"distance-variable count k must be >= 1, got {k}")
    if alpha_bias is None:
        alpha_bias = DEFAULT_ALPHA_BIAS
    if alpha_bias <= 0:
        raise ValueError(f"bias exponent must be positive, got {alpha_bias}")
    return ProblemSpec(family=family, m=m, k=k, alpha_bias=float(alpha_bias))


def _g_multimodal(xm: np.ndarray) -> np.ndarray:
    # Rastrigin-like distance function of DTLZ1/DTLZ3; zero iff all vars at 0.5
    z = xm - 0.5
    return 100.0 * (xm.shape[1] + np.sum(z * z - np.cos(20.0 * np.pi * z), axis=1))


def _g_sphere(xm: np.ndarray) -> np.ndarray:
    z = xm - 0.5
    return np.sum(z * z, axis=1)


def _linear_shape(pos: np.ndarray, g: np.ndarray, m: int) -> np.ndarray:
    ones = np.ones((pos.shape[0], 1))
    prod = np.concatenate([ones, np.cumprod(pos, axis=1)], axis=1)
    scale = 0.5 * (1.0 + g)
    out = np.empty((pos.shape[0], m))
    for j in range(1, m + 1):
        q = m - j
        f = scale * prod[:, q]
        if j > 1:
            f = f * (1.0 - pos[:, q])
        out[:, j - 1] = f
    return out


def _spherical_shape(pos: np.ndarray, g: np.ndarray, m: int) -> np.ndarray:
    angles = pos * (np.pi / 2.0)
    cos = np.cos(angles)
    sin = np.sin(angles)
    ones = np.ones((pos.shape[0], 1))
    prod = np.concatenate([ones, np.cumprod(cos, axis=1)], axis=1)
    scale = 1.0 + g
    out = np.empty((pos.shape[0], m))
    for j in range(1, m + 1):
        q = m - j
        f = scale * prod[:, q]
        if j > 1:
            f = f * sin[:, q]
        out[:, j - 1] = f
    return out


def evaluate(spec: ProblemSpec, x) -> np.ndarray:
    """Objective vector(s) at decision vector(s) x in [0,1]^n.

    Accepts a single vector of length n or a batch of shape (batch, n) and
    returns the matching shape with m objective values. Evaluation is
    deterministic; inputs outside the unit box raise a ValueError naming the
    offending coordinate.
    """
    x = np.asarray(x, dtype=float)
    single = x.ndim == 1
    X = np.atleast_2d(x)
    if X.shape[1] != spec.n:
        raise ValueError(f"expected {spec.n} decision variables, got {X.shape[1]}")
    bad = (X < 0.0) | (X > 1.0)
    if bad.any():
        i, j = map(int, np.argwhere(bad)[0])
        where = f"row {i}, " if not single else ""
        raise ValueError(f"decision variable out of bounds ({where}coordinate {j}): {X[i, j]!r} not in [0, 1]")

    pos = X[:, : spec.m - 1]
    xm = X[:, spec.m - 1 :]
    if spec.family == "dtlz1":
        F = _linear_shape(pos, _g_multimodal(xm), spec.m)
    elif spec.family == "dtlz2":
        F = _spherical_shape(pos, _g_sphere(xm), spec.m)
    elif spec.family == "dtlz3":
        F = _spherical_shape(pos, _g_multimodal(xm), spec.m)
    else:
        F = _spherical_shape(pos**spec.alpha_bias, _g_sphere(xm), spec.m)
    return F[0] if single else F


def sample_true_pf(spec: ProblemSpec, count: int, rng: np.random.Generator) -> np.ndarray:
    """Random points on the analytic Pareto-optimal front.

    DTLZ1: uniform over the simplex sum(f) = 0.5 via a symmetric Dirichlet
    draw. DTLZ2-4: uniform directions on the positive octant of the unit
    sphere via normalized absolute Gaussians. Reproducible given the rng.
    """
    if count < 1:
        raise ValueError(f"sample count must be >= 1, got {count}")
    if spec.family == "dtlz1":
        return 0.5 * rng.dirichlet(np.ones(spec.m), size=count)
    v = np.abs(rng.standard_normal((count, spec.m)))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def front_targets(spec: ProblemSpec, directions) -> np.ndarray:
    """Intersections of reference-line directions with the analytic front.

    Each direction from the origin is scaled onto the front: onto the plane
    sum(f) = 0.5 for DTLZ1, onto the unit sphere for DTLZ2-4. These are the
    front points the decomposition targets, and the conventional reference
    set for IGD when comparing decomposition-based algorithms.
    """
    D = np.asarray(directions, dtype=float)
    if D.ndim != 2 or D.shape[1] != spec.m:
        raise ValueError(f"directions must have shape (N, {spec.m})")
    if spec.family == "dtlz1":
        return 0.5 * D / D.sum(axis=1, keepdims=True)
    return D / np.linalg.norm(D, axis=1, keepdims=True)


def ideal_point(spec: ProblemSpec) -> np.ndarray:
    """The known ideal point; the origin for all of DTLZ1-4."""
    return np.zeros(spec.m)


def write_front_csv(path, points) -> None:
    """Write objective vectors as CSV: header f1..fm, scientific notation,
    9 significant digits, LF line endings."""
    F = np.atleast_2d(np.asarray(points, dtype=float))
    header = ",".join(f"f{j + 1}" for j in range(F.shape[1]))
    with open(path, "w", newline="\n") as fh:
        fh.write(header + "\n")
        for row in F:
            fh.write(",".join(f"{v:.8e}" for v in row) + "\n")
