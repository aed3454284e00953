"""Fish school optimizer for many-objective problems.

The school is split once, at initialization, into clusters, one per
reference line; each cluster minimizes the PBI aggregated weight of its own
line. Every iteration applies, in order: a greedy individual move (uniform
random direction, or a fixed-length step toward an SBX child of the fish
and its cluster leader), a feeding pass that refreshes weight vectors and
aggregated weights under a per-iteration normalization snapshot, leader
definition (all fish attaining the cluster-minimal aggregated weight), a
collective-instinctive drift toward this iteration's improvers, and a
collective-volitive contraction or expansion around the cluster barycenter.
Leaders are exempt from both collective movements. The final answer is the
union over clusters of each cluster's Pareto-non-dominated members.

Draw order per iteration is fixed for reproducibility: individual-move
randoms (one (S, n) block for uniform moves; two (S, n) blocks u, v for SBX
moves), then S stagnation-avoidance uniforms when worsening acceptance is
on, then S volitive uniforms when the volitive movement is on.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dtlz import ProblemSpec, evaluate, ideal_point
from .metrics import pareto_filter
from .refgeom import ReferenceSet, perpendicular_distance_matrix
from .scalarize import NormalizationState, normalize, pbi_aggregate, update_bounds

__all__ = [
    "VariantConfig",
    "VARIANTS",
    "SwarmConfig",
    "RunOutput",
    "assign_clusters",
    "cluster_segments",
    "leader_flags",
    "instinctive_shift",
    "cluster_barycenters",
    "sbx_children",
    "run",
]

# aggregated weights below this floor are clamped before taking reciprocals
W_BAR_FLOOR = 1e-12
# direction vectors shorter than this are treated as zero (no move)
DIR_EPS = 1e-12


@dataclass(frozen=True)
class VariantConfig:
    """Operator gating for one algorithm variant.

    individual selects the move generator ("uniform" or "sbx"); sar=1
    accepts worsening individual moves with the decaying probability,
    sar=0 accepts improvements only.
    """

    individual: str
    use_instinctive: bool
    use_volitive: bool
    sar: int

    def __post_init__(self):
        if self.individual not in ("uniform", "sbx"):
            raise ValueError(f"unknown individual move kind: {self.individual!r}")
        if self.sar not in (0, 1):
            raise ValueError(f"sar mode must be 0 or 1, got {self.sar}")


# the base algorithm plus the three SBX operator ablations
VARIANTS = {
    "wmofss": VariantConfig(individual="uniform", use_instinctive=True, use_volitive=True, sar=1),
    "sbx-a": VariantConfig(individual="sbx", use_instinctive=False, use_volitive=True, sar=0),
    "sbx-b": VariantConfig(individual="sbx", use_instinctive=False, use_volitive=False, sar=0),
    "sbx-c": VariantConfig(individual="sbx", use_instinctive=True, use_volitive=True, sar=0),
}


@dataclass(frozen=True)
class SwarmConfig:
    """Run-level knobs of the optimizer.

    Steps are fractions of the unit box width. step_ind decays from init to
    final across the configured iterations, linearly by default or
    geometrically (step_decay="exponential", equal iteration counts per
    decade, which leaves most of the budget at fine steps); step_vol is
    always step_vol_factor times the current step_ind; the
    worsening-acceptance probability decays linearly from alpha_sar_init to
    alpha_sar_final. nadir picks the f_max estimate: "running" keeps the
    all-time per-objective maxima, "school" rebuilds them from the current
    school every iteration.
    """

    school_size: int
    iterations: int
    theta: float
    variant: VariantConfig
    step_ind_init: float = 0.1
    step_ind_final: float = 1e-4
    step_decay: str = "linear"
    step_vol_factor: float = 2.0
    alpha_sar_init: float = 0.25
    alpha_sar_final: float = 0.0
    eta_c: float = 1.0
    init: str = "box"
    nadir: str = "running"
    use_known_ideal: bool = True

    def __post_init__(self):
        if self.school_size < 1:
            raise ValueError(f"school_size must be >= 1, got {self.school_size}")
        if self.iterations < 0:
            raise ValueError(f"iterations must be >= 0, got {self.iterations}")
        if self.theta < 0:
            raise ValueError(f"theta must be >= 0, got {self.theta}")
        if not 0.0 < self.step_ind_final <= self.step_ind_init:
            raise ValueError("need 0 < step_ind_final <= step_ind_init")
        if self.step_decay not in ("exponential", "linear"):
            raise ValueError(f"unknown step_decay mode: {self.step_decay!r}")
        if self.step_vol_factor <= 0:
            raise ValueError(f"step_vol_factor must be > 0, got {self.step_vol_factor}")
        if not 0.0 <= self.alpha_sar_final <= self.alpha_sar_init <= 1.0:
            raise ValueError("need 0 <= alpha_sar_final <= alpha_sar_init <= 1")
        if self.eta_c <= 0:
            raise ValueError(f"eta_c must be > 0, got {self.eta_c}")
        if self.init not in ("box", "symmetric"):
            raise ValueError(f"unknown init mode: {self.init!r}")
        if self.nadir not in ("school", "running"):
            raise ValueError(f"unknown nadir mode: {self.nadir!r}")


@dataclass(frozen=True)
class RunOutput:
    """Final state of one optimization run.

    front_mask marks the fish returned as the answer: the union over
    clusters of each cluster's Pareto-non-dominated members. front_x and
    front_f are the masked rows of x and f.
    """

    x: np.ndarray
    f: np.ndarray
    w_bar: np.ndarray
    cluster: np.ndarray
    is_leader: np.ndarray
    front_mask: np.ndarray
    front_x: np.ndarray
    front_f: np.ndarray
    norm: NormalizationState


def assign_clusters(W, directions) -> np.ndarray:
    """Split the school into one cluster per reference line.

    Greedy global assignment on perpendicular distance: all (fish, line)
    pairs are visited in ascending distance order (ties broken by lower
    line id, then lower fish index) and a fish is bound to a line while the
    line is below the capacity floor floor(S/N'). The S mod N' fish left
    over go to their closest line unconditionally, so every line ends with
    at least the floor.
    """
    W = np.asarray(W, dtype=float)
    D = perpendicular_distance_matrix(W, directions)
    S, Np = D.shape
    cluster = np.full(S, -1, dtype=np.int64)
    cap = S // Np
    if cap > 0:
        fish_idx = np.repeat(np.arange(S), Np)
        line_idx = np.tile(np.arange(Np), S)
        order = np.lexsort((fish_idx, line_idx, D.ravel()))
        counts = np.zeros(Np, dtype=np.int64)
        left = cap * Np
        for k in order:
            f, l = fish_idx[k], line_idx[k]
            if cluster[f] >= 0 or counts[l] >= cap:
                continue
            cluster[f] = l
            counts[l] += 1
            left -= 1
            if left == 0:
                break
    rest = np.flatnonzero(cluster < 0)
    if rest.size:
        cluster[rest] = np.argmin(D[rest], axis=1)
    return cluster


def cluster_segments(cluster: np.ndarray, n_clusters: int) -> tuple[np.ndarray, np.ndarray]:
    """Stable sort order grouping fish by cluster plus each cluster's start
    offset in that order. Requires every cluster id in 0..n_clusters-1 to be
    present (reduceat over an empty segment would misbehave)."""
    order = np.argsort(cluster, kind="stable")
    counts = np.bincount(cluster, minlength=n_clusters)
    if np.any(counts == 0):
        raise ValueError("every cluster must be non-empty")
    starts = np.concatenate(([0], np.cumsum(counts)[:-1]))
    return order, starts


def leader_flags(
    w_bar: np.ndarray, cluster: np.ndarray, order: np.ndarray, starts: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Leader mask and the designated leader index per cluster.

    Every fish attaining its cluster's minimal aggregated weight is a
    leader; the designated leader (SBX parent) is the lowest-index one.
    """
    cmin = np.minimum.reduceat(w_bar[order], starts)
    is_leader = w_bar == cmin[cluster]
    S = w_bar.shape[0]
    ranked = np.where(is_leader, np.arange(S), S)
    designated = np.minimum.reduceat(ranked[order], starts)
    return is_leader, designated


def instinctive_shift(
    delta_x: np.ndarray, delta_w_bar: np.ndarray, order: np.ndarray, starts: np.ndarray
) -> np.ndarray:
    """Per-cluster improvement-weighted mean displacement.

    Only fish that improved their aggregated weight this iteration
    (delta_w_bar > 0) contribute; a cluster with no improver gets the zero
    vector.
    """
    dw = np.where(delta_w_bar > 0.0, delta_w_bar, 0.0)
    den = np.add.reduceat(dw[order], starts)
    num = np.add.reduceat(delta_x[order] * dw[order][:, None], starts, axis=0)
    safe = den > 0.0
    return np.where(safe[:, None], num / np.where(safe, den, 1.0)[:, None], 0.0)


def cluster_barycenters(
    X: np.ndarray, w_bar: np.ndarray, order: np.ndarray, starts: np.ndarray
) -> np.ndarray:
    """Reciprocal-aggregated-weight barycenter of each cluster. Weights are
    floored at W_BAR_FLOOR before inversion, so a fish scoring ~0 pulls the
    barycenter onto itself without dividing by zero."""
    recip = 1.0 / np.maximum(w_bar, W_BAR_FLOOR)
    den = np.add.reduceat(recip[order], starts)
    num = np.add.reduceat(X[order] * recip[order][:, None], starts, axis=0)
    return num / den[:, None]


def sbx_children(x: np.ndarray, x_leader: np.ndarray, u: np.ndarray, v: np.ndarray, eta_c: float) -> np.ndarray:
    """One SBX child per row from parents (x, x_leader).

    Per coordinate, the spread factor is (2u)^(1/(eta_c+1)) for u <= 0.5
    and (1/(2-2u))^(1/(eta_c+1)) otherwise (unbounded form, internal
    constant 2), and v <= 0.5 picks the child below the parents' midpoint.
    u, v must be in [0, 1) so the spread stays finite.
    """
    exponent = 1.0 / (eta_c + 1.0)
    beta = np.where(u <= 0.5, (2.0 * u) ** exponent, (1.0 / (2.0 - 2.0 * u)) ** exponent)
    mid = 0.5 * (x + x_leader)
    half_spread = 0.5 * beta * np.abs(x - x_leader)
    return np.where(v <= 0.5, mid - half_spread, mid + half_spread)


def _snapshot(running: NormalizationState, F: np.ndarray, mode: str) -> NormalizationState:
    """Normalization snapshot for this iteration: the running state itself,
    or a rebuild whose f_max comes from the current school only."""
    if mode == "running":
        return running
    fresh = NormalizationState(
        z_star=running.z_star,
        f_max=np.full(running.z_star.shape, -np.inf),
        ideal_known=running.ideal_known,
    )
    return update_bounds(fresh, F)


def run(
    spec: ProblemSpec,
    refset: ReferenceSet,
    config: SwarmConfig,
    rng: np.random.Generator,
    trace=None,
) -> RunOutput:
    """Execute one full optimization run; see the module docstring for the
    iteration structure. Deterministic given (spec, refset, config, seed).

    trace, when given, is called as trace(t, step_ind, X, F, w_bar,
    cluster) at the end of every iteration for monitoring; it must not
    mutate its arguments."""
    directions = np.asarray(refset.directions, dtype=float)
    Np = directions.shape[0]
    S, T = config.school_size, config.iterations
    if S < Np:
        raise ValueError(f"school_size must be >= the number of reference lines ({Np}), got {S}")
    n, m = spec.n, spec.m
    variant = config.variant
    theta = config.theta

    if config.init == "box":
        X = rng.uniform(0.0, 1.0, size=(S, n))
    else:
        # the symmetric idiom: draw over [-1, 1] and clamp into the box
        X = np.clip(rng.uniform(-1.0, 1.0, size=(S, n)), 0.0, 1.0)
    F = evaluate(spec, X)

    if config.use_known_ideal:
        running = NormalizationState.with_known_ideal(ideal_point(spec))
    else:
        running = NormalizationState.empty(m)
    running = update_bounds(running, F)
    snap = _snapshot(running, F, config.nadir)

    cluster = assign_clusters(normalize(F, snap), directions)
    order, starts = cluster_segments(cluster, Np)
    fish_dirs = directions[cluster]
    prev_total = np.full(Np, np.inf)
    is_leader = np.zeros(S, dtype=bool)

    for t in range(T):
        frac = t / (T - 1) if T > 1 else 0.0
        if config.step_decay == "linear":
            step_ind = config.step_ind_init + (config.step_ind_final - config.step_ind_init) * frac
        else:
            step_ind = config.step_ind_init * (config.step_ind_final / config.step_ind_init) ** frac
        step_vol = config.step_vol_factor * step_ind
        alpha = config.alpha_sar_init + (config.alpha_sar_final - config.alpha_sar_init) * frac

        # score current positions under the frozen snapshot
        wbar_cur = pbi_aggregate(normalize(F, snap), fish_dirs, theta)

        if variant.individual == "uniform":
            r = rng.uniform(-1.0, 1.0, size=(S, n))
            cand = X + step_ind * r
        else:
            _, designated = leader_flags(wbar_cur, cluster, order, starts)
            u = rng.uniform(size=(S, n))
            v = rng.uniform(size=(S, n))
            child = sbx_children(X, X[designated[cluster]], u, v, config.eta_c)
            d = child - X
            dn = np.linalg.norm(d, axis=1)
            ok = dn >= DIR_EPS
            scale = np.where(ok, step_ind / np.where(ok, dn, 1.0), 0.0)
            cand = X + scale[:, None] * d
        np.clip(cand, 0.0, 1.0, out=cand)

        F_cand = evaluate(spec, cand)
        wbar_cand = pbi_aggregate(normalize(F_cand, snap), fish_dirs, theta)
        improved = wbar_cand < wbar_cur
        if variant.sar == 1:
            accept = improved | (rng.uniform(size=S) < alpha)
        else:
            accept = improved

        delta_x = np.zeros_like(X)
        delta_w = np.zeros(S)
        delta_x[accept] = cand[accept] - X[accept]
        delta_w[accept] = wbar_cur[accept] - wbar_cand[accept]
        X[accept] = cand[accept]
        F[accept] = F_cand[accept]

        # one bounds update per iteration, then feed everyone
        running = update_bounds(running, F)
        snap = _snapshot(running, F, config.nadir)
        w_bar = pbi_aggregate(normalize(F, snap), fish_dirs, theta)
        is_leader, _ = leader_flags(w_bar, cluster, order, starts)

        if variant.use_instinctive or variant.use_volitive:
            movers = ~is_leader
            X_before = X.copy()
            if variant.use_instinctive:
                I = instinctive_shift(delta_x, delta_w, order, starts)
                X[movers] = np.clip(X[movers] + I[cluster[movers]], 0.0, 1.0)
            if variant.use_volitive:
                B = cluster_barycenters(X, w_bar, order, starts)
                total = np.add.reduceat(w_bar[order], starts)
                sign = np.where(total < prev_total, -1.0, 1.0)
                prev_total = total
                rvol = rng.uniform(size=S)
                diff = X - B[cluster]
                dist = np.linalg.norm(diff, axis=1)
                ok = dist >= DIR_EPS
                scale = np.where(ok, step_vol * rvol / np.where(ok, dist, 1.0), 0.0)
                disp = sign[cluster][:, None] * scale[:, None] * diff
                X[movers] = np.clip(X[movers] + disp[movers], 0.0, 1.0)
            changed = np.any(X != X_before, axis=1)
            if np.any(changed):
                F[changed] = evaluate(spec, X[changed])

        if trace is not None:
            trace(t, step_ind, X, F, w_bar, cluster)

    # closing feed so the reported scores match the final positions
    running = update_bounds(running, F)
    snap = _snapshot(running, F, config.nadir)
    w_bar = pbi_aggregate(normalize(F, snap), fish_dirs, theta)
    is_leader, _ = leader_flags(w_bar, cluster, order, starts)

    front_mask = np.zeros(S, dtype=bool)
    bounds = np.concatenate((starts, [S]))
    for c in range(Np):
        idx = order[bounds[c] : bounds[c + 1]]
        front_mask[idx[pareto_filter(F[idx])]] = True

    return RunOutput(
        x=X,
        f=F,
        w_bar=w_bar,
        cluster=cluster,
        is_leader=is_leader,
        front_mask=front_mask,
        front_x=X[front_mask],
        front_f=F[front_mask],
        norm=snap,
    )
