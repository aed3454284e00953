"""Quality indicators and statistical comparison helpers.

Provides the inverted generational distance indicator, a Pareto filter for
extracting the non-dominated subset of a final population, a Kruskal-Wallis
rank test (own ranking and tie correction, chi-square tail via the
regularized upper incomplete gamma function), and per-experiment summary
statistics.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist
from scipy.special import gammaincc

__all__ = [
    "StatSummary",
    "KruskalResult",
    "igd",
    "pareto_filter",
    "kruskal_wallis",
    "verdict",
    "summarize",
]


def igd(obtained, reference) -> float:
    """Inverted generational distance of an obtained set.

    Mean, over the reference points, of the Euclidean distance to the
    nearest obtained point. Lower is better; 0 means every reference point
    is matched exactly.
    """
    A = np.asarray(obtained, dtype=float)
    R = np.asarray(reference, dtype=float)
    if A.ndim == 1:
        A = A[None, :]
    if R.ndim == 1:
        R = R[None, :]
    if A.size == 0 or R.size == 0:
        raise ValueError("igd needs non-empty obtained and reference sets")
    if A.shape[1] != R.shape[1]:
        raise ValueError(f"dimension mismatch: obtained has {A.shape[1]} columns, reference {R.shape[1]}")
    return float(cdist(R, A).min(axis=1).mean())


def pareto_filter(points) -> np.ndarray:
    """Boolean mask of Pareto-non-dominated rows (minimization).

    A row is dropped iff some other row is <= in every coordinate and < in
    at least one. Duplicate rows do not dominate each other, so all copies
    of a non-dominated point are kept.
    """
    P = np.asarray(points, dtype=float)
    if P.ndim != 2:
        raise ValueError(f"expected a 2-d array of points, got ndim={P.ndim}")
    n = P.shape[0]
    keep = np.ones(n, dtype=bool)
    for i in range(n):
        # rows already dominated cannot eliminate anything their dominator
        # would not (dominance is transitive), so skip them as dominators
        if not keep[i]:
            continue
        dominated = np.all(P >= P[i], axis=1) & np.any(P > P[i], axis=1)
        keep &= ~dominated
    return keep


@dataclass(frozen=True)
class KruskalResult:
    statistic: float
    pvalue: float
    df: int


def _midranks(values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Ranks 1..N with ties sharing the mean of their rank span; also
    returns the tie-group sizes for the correction factor."""
    order = np.argsort(values, kind="mergesort")
    sv = values[order]
    ranks = np.empty(values.shape[0], dtype=float)
    sizes = []
    i = 0
    n = values.shape[0]
    while i < n:
        j = i
        while j + 1 < n and sv[j + 1] == sv[i]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        sizes.append(j - i + 1)
        i = j + 1
    return ranks, np.asarray(sizes, dtype=float)


def kruskal_wallis(*samples) -> KruskalResult:
    """Kruskal-Wallis H test for k independent samples.

    H is the rank-variance statistic with the standard tie correction; the
    p-value is the chi-square upper tail with k-1 degrees of freedom,
    evaluated as gammaincc(df/2, H/2).
    """
    if len(samples) == 1 and not np.isscalar(samples[0][0]):
        samples = tuple(samples[0])
    if len(samples) < 2:
        raise ValueError("kruskal_wallis needs at least two samples")
    groups = [np.asarray(s, dtype=float).ravel() for s in samples]
    sizes = np.array([g.shape[0] for g in groups])
    if np.any(sizes == 0):
        raise ValueError("kruskal_wallis samples must be non-empty")
    pooled = np.concatenate(groups)
    N = pooled.shape[0]
    ranks, tie_sizes = _midranks(pooled)
    correction = 1.0 - float(np.sum(tie_sizes**3 - tie_sizes)) / (N**3 - N)
    df = len(groups) - 1
    if correction <= 0.0:
        # every pooled value identical: no rank variation, H taken as 0
        return KruskalResult(statistic=0.0, pvalue=1.0, df=df)
    bounds = np.concatenate(([0], np.cumsum(sizes)))
    rank_sums = np.add.reduceat(ranks, bounds[:-1])
    H = 12.0 / (N * (N + 1)) * float(np.sum(rank_sums**2 / sizes)) - 3.0 * (N + 1)
    H /= correction
    p = float(gammaincc(df / 2.0, H / 2.0))
    return KruskalResult(statistic=float(H), pvalue=p, df=df)


def verdict(sample_a, sample_b, alpha: float = 0.05) -> str:
    """Pairwise significance verdict for minimization samples.

    '+' when a's median is lower and the rank test rejects at alpha, '-'
    when a's median is higher and the test rejects, '=' otherwise.
    """
    result = kruskal_wallis(sample_a, sample_b)
    if result.pvalue >= alpha:
        return "="
    med_a = float(np.median(np.asarray(sample_a, dtype=float)))
    med_b = float(np.median(np.asarray(sample_b, dtype=float)))
    if med_a < med_b:
        return "+"
    if med_a > med_b:
        return "-"
    return "="


@dataclass(frozen=True)
class StatSummary:
    """Order statistics of one indicator sample across repeated runs."""

    count: int
    best: float
    median: float
    worst: float
    mean: float
    std: float


def summarize(values) -> StatSummary:
    """Best/median/worst/mean/std of a sample of indicator values (lower is
    better, so best = min). std uses ddof=1, 0.0 for a single value."""
    v = np.asarray(values, dtype=float).ravel()
    if v.size == 0:
        raise ValueError("summarize needs at least one value")
    std = float(np.std(v, ddof=1)) if v.size > 1 else 0.0
    return StatSummary(
        count=int(v.size),
        best=float(v.min()),
        median=float(np.median(v)),
        worst=float(v.max()),
        mean=float(v.mean()),
        std=std,
    )
