"""Experiment orchestration: configuration, seeded multi-run execution,
artifact persistence, and comparison reports.

One experiment is `runs` independent optimization runs of a single
configuration. Run k draws its generator from
numpy.random.SeedSequence(seed, spawn_key=(0, k)), so runs are independent
and reorderable; the true-front sampler (igd_reference="sampled") uses
spawn_key=(1,). Artifacts written to the output directory: result.json
(the full RunResult), igd.csv (header "run,igd", one row per run,
scientific notation with 9 significant digits, LF endings), and one
front_run<k>.csv per run; optionally pf_sample.csv with the sampled true
front. igd.csv is byte-identical across invocations with equal config and
seed.

By default the IGD reference set is the analytic intersection of the run's
reference lines with the true front ("targets"), which measures how well
the school solved exactly the sub-problems it was given;
igd_reference="sampled" switches to a pf_samples-point random sample of
the front.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields, replace

import numpy as np

from .dtlz import FAMILIES, ProblemSpec, front_targets, make_problem, sample_true_pf, write_front_csv
from .metrics import igd, kruskal_wallis, summarize, verdict
from .published import ALGORITHMS_MAIN, MAIN_IGD, SBX_COMPARISON_IGD
from .refgeom import ReferenceSet, generate_two_layer
from .swarm import VARIANTS, SwarmConfig, run

__all__ = [
    "ConfigError",
    "ArtifactError",
    "RunConfig",
    "RunResult",
    "run_experiment",
    "compare",
    "export_reference_table",
]

# reference-set layer divisions by objective count: full sets for the base
# algorithm, reduced sets for the SBX variants (more fish per cluster)
LAYER_DEFAULTS = {
    "full": {3: (12, 0), 5: (6, 0), 10: (3, 2)},
    "reduced": {3: (4, 0), 5: (3, 0), 10: (2, 1)},
}
DEFAULT_SCHOOL_WMOFSS = 210
DEFAULT_SCHOOL_SBX = 1000


class ConfigError(ValueError):
    """Invalid configuration; carries the offending field name."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class ArtifactError(Exception):
    """A result artifact is missing or malformed; carries the path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class RunConfig:
    """Full experiment configuration.

    None means "resolve a default": theta 5 for wmofss and 1 for SBX
    variants; school_size 1000 for SBX variants, else the larger of 210 and
    the reference-line count; k per problem family; (p_outer, p_inner) by
    objective count and variant kind, available for m in {3, 5, 10} only.
    """

    problem: str = "dtlz2"
    objectives: int = 3
    k: int | None = None
    alpha_bias: float = 100.0
    variant: str = "wmofss"
    theta: float | None = None
    school_size: int | None = None
    iterations: int = 10000
    runs: int = 20
    seed: int = 0
    p_outer: int | None = None
    p_inner: int | None = None
    ref_points: str | None = None
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
    igd_reference: str = "targets"
    pf_samples: int = 10000
    write_pf_sample: bool = False
    jobs: int = 1
    out: str | None = None


@dataclass(frozen=True)
class RunResult:
    """Everything one experiment produced; serialized as result.json.

    config echoes the resolved configuration (defaults filled in). Each
    per_run entry holds the run's igd, wall_time in seconds, and the
    returned front as objective rows plus the matching decision rows.
    summary is the igd sample's statistics.
    """

    config: dict
    version: str
    per_run: list
    summary: dict

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RunResult":
        raw = json.loads(text)
        return cls(
            config=raw["config"],
            version=raw["version"],
            per_run=raw["per_run"],
            summary=raw["summary"],
        )


def _package_version() -> str:
    from wmofss import __version__

    return __version__


def _resolve(config: RunConfig) -> RunConfig:
    """Fill in defaulted fields and validate everything that does not need
    the reference set; returns a fully concrete config."""
    if config.problem not in FAMILIES:
        raise ConfigError("problem", f"unknown problem {config.problem!r}; choose from {sorted(FAMILIES)}")
    if config.variant not in VARIANTS:
        raise ConfigError("variant", f"unknown variant {config.variant!r}; choose from {sorted(VARIANTS)}")
    if config.objectives < 2:
        raise ConfigError("objectives", f"need at least 2 objectives, got {config.objectives}")
    if config.runs < 1:
        raise ConfigError("runs", f"need at least 1 run, got {config.runs}")
    if config.iterations < 0:
        raise ConfigError("iterations", f"iterations must be >= 0, got {config.iterations}")
    if config.igd_reference not in ("targets", "sampled"):
        raise ConfigError("igd_reference", f"must be 'targets' or 'sampled', got {config.igd_reference!r}")
    if config.pf_samples < 1:
        raise ConfigError("pf_samples", f"must be >= 1, got {config.pf_samples}")
    if config.jobs < 1:
        raise ConfigError("jobs", f"must be >= 1, got {config.jobs}")
    if not -(2**63) <= config.seed < 2**64:
        raise ConfigError("seed", "seed must fit in 64 bits")

    sbx = config.variant != "wmofss"
    updates = {}
    if config.theta is None:
        updates["theta"] = 1.0 if sbx else 5.0
    if config.p_outer is None and config.ref_points is None:
        table = LAYER_DEFAULTS["reduced" if sbx else "full"]
        if config.objectives not in table:
            raise ConfigError(
                "p_outer",
                f"no default reference-set divisions for m={config.objectives}; "
                "set p_outer (and optionally p_inner) or ref_points",
            )
        p_outer, p_inner = table[config.objectives]
        updates["p_outer"] = p_outer
        if config.p_inner is None:
            updates["p_inner"] = p_inner
    elif config.p_inner is None:
        updates["p_inner"] = 0
    return replace(config, **updates)


def _build_reference(config: RunConfig) -> ReferenceSet:
    if config.ref_points is not None:
        try:
            pts = np.loadtxt(config.ref_points, delimiter=",", dtype=float, ndmin=2)
        except OSError:
            raise
        except ValueError as exc:
            raise ArtifactError(config.ref_points, f"unreadable reference points: {exc}") from exc
        if pts.shape[1] != config.objectives:
            raise ConfigError(
                "ref_points",
                f"{config.ref_points} has {pts.shape[1]} columns, expected {config.objectives}",
            )
        if np.any(np.linalg.norm(pts, axis=1) <= 0.0) or np.any(pts < 0.0):
            raise ConfigError("ref_points", "reference points must be nonnegative with positive norm")
        return ReferenceSet(directions=pts, m=config.objectives, layer_params=(0, 0))
    try:
        return generate_two_layer(config.objectives, config.p_outer, config.p_inner)
    except ValueError as exc:
        raise ConfigError("p_outer", str(exc)) from exc


def _build_spec(config: RunConfig) -> ProblemSpec:
    try:
        return make_problem(config.problem, config.objectives, k=config.k, alpha_bias=config.alpha_bias)
    except ValueError as exc:
        raise ConfigError("problem", str(exc)) from exc


def _build_swarm_config(config: RunConfig, n_lines: int) -> SwarmConfig:
    school = config.school_size
    if school is None:
        school = DEFAULT_SCHOOL_SBX if config.variant != "wmofss" else max(DEFAULT_SCHOOL_WMOFSS, n_lines)
    if school < n_lines:
        raise ConfigError("school_size", f"must be >= the number of reference lines ({n_lines}), got {school}")
    try:
        return SwarmConfig(
            school_size=school,
            iterations=config.iterations,
            theta=config.theta,
            variant=VARIANTS[config.variant],
            step_ind_init=config.step_ind_init,
            step_ind_final=config.step_ind_final,
            step_decay=config.step_decay,
            step_vol_factor=config.step_vol_factor,
            alpha_sar_init=config.alpha_sar_init,
            alpha_sar_final=config.alpha_sar_final,
            eta_c=config.eta_c,
            init=config.init,
            nadir=config.nadir,
            use_known_ideal=config.use_known_ideal,
        )
    except ValueError as exc:
        raise ConfigError("config", str(exc)) from exc


def _reference_front(config: RunConfig, spec: ProblemSpec, refset: ReferenceSet) -> np.ndarray:
    if config.igd_reference == "targets":
        return front_targets(spec, refset.directions)
    rng = np.random.default_rng(np.random.SeedSequence(config.seed, spawn_key=(1,)))
    return sample_true_pf(spec, config.pf_samples, rng)


def _single_run(args) -> tuple[float, float, list, list]:
    spec, refset, swarm_config, seed, run_index, reference = args
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(0, run_index)))
    t0 = time.perf_counter()
    out = run(spec, refset, swarm_config, rng)
    wall = time.perf_counter() - t0
    return (
        float(igd(out.front_f, reference)),
        wall,
        out.front_f.tolist(),
        out.front_x.tolist(),
    )


def run_experiment(config: RunConfig) -> RunResult:
    """Execute the configured experiment, write its artifacts, and return
    the in-memory RunResult. See the module docstring for seed splitting
    and file formats."""
    config = _resolve(config)
    if config.out is None:
        raise ConfigError("out", "output directory is required")
    spec = _build_spec(config)
    refset = _build_reference(config)
    swarm_config = _build_swarm_config(config, len(refset))
    reference = _reference_front(config, spec, refset)

    tasks = [(spec, refset, swarm_config, config.seed, k, reference) for k in range(config.runs)]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            outcomes = list(pool.map(_single_run, tasks))
    else:
        outcomes = [_single_run(task) for task in tasks]

    per_run = [
        {"igd": igd_value, "wall_time": wall, "front": front, "positions": positions}
        for igd_value, wall, front, positions in outcomes
    ]
    igds = [entry["igd"] for entry in per_run]
    echo = asdict(replace(config, school_size=swarm_config.school_size))
    echo["n_lines"] = len(refset)
    echo["n_decision"] = spec.n
    echo["k"] = spec.k
    result = RunResult(
        config=echo,
        version=_package_version(),
        per_run=per_run,
        summary=asdict(summarize(igds)),
    )

    os.makedirs(config.out, exist_ok=True)
    with open(os.path.join(config.out, "result.json"), "w", newline="\n") as fh:
        fh.write(result.to_json())
    with open(os.path.join(config.out, "igd.csv"), "w", newline="\n") as fh:
        fh.write("run,igd\n")
        for k, value in enumerate(igds):
            fh.write(f"{k},{value:.8e}\n")
    for k, entry in enumerate(per_run):
        write_front_csv(os.path.join(config.out, f"front_run{k}.csv"), np.asarray(entry["front"]))
    if config.write_pf_sample:
        write_front_csv(os.path.join(config.out, "pf_sample.csv"), np.asarray(reference))
    return result


def _load_igd_column(result_dir: str) -> np.ndarray:
    path = os.path.join(result_dir, "igd.csv")
    if not os.path.isfile(path):
        raise ArtifactError(path, "no igd.csv in this directory")
    with open(path) as fh:
        lines = [line.strip() for line in fh if line.strip()]
    if not lines or lines[0] != "run,igd":
        raise ArtifactError(path, "expected header 'run,igd'")
    try:
        values = np.array([float(line.split(",")[1]) for line in lines[1:]])
    except (IndexError, ValueError) as exc:
        raise ArtifactError(path, f"malformed row: {exc}") from exc
    if values.size == 0:
        raise ArtifactError(path, "no data rows")
    return values


def compare(result_dirs: list, alpha: float = 0.05) -> str:
    """Summary table plus pairwise rank-test verdicts for two or more
    result directories. '+' in row i, column j means group i is
    significantly better (lower median IGD) than group j at level alpha."""
    if len(result_dirs) < 2:
        raise ConfigError("result_dirs", "need at least two result directories")
    groups = [_load_igd_column(d) for d in result_dirs]
    names = [os.path.basename(os.path.normpath(d)) or d for d in result_dirs]

    width = max(12, *(len(n) for n in names))
    out = [f"{'group':<{width}}  {'n':>4}  {'median':>12}  {'mean':>12}  {'best':>12}  {'worst':>12}"]
    for name, values in zip(names, groups):
        s = summarize(values)
        out.append(
            f"{name:<{width}}  {s.count:>4}  {s.median:>12.4e}  {s.mean:>12.4e}  "
            f"{s.best:>12.4e}  {s.worst:>12.4e}"
        )
    if len(groups) > 2:
        overall = kruskal_wallis(*groups)
        out.append(
            f"k-sample Kruskal-Wallis: H={overall.statistic:.6g}, "
            f"df={overall.df}, p={overall.pvalue:.4e}"
        )
    out.append(f"pairwise verdicts at alpha={alpha:g} (+ row better, - row worse, = indistinguishable):")
    header = f"{'':<{width}}  " + "  ".join(f"{n:>{width}}" for n in names)
    out.append(header)
    for i, name in enumerate(names):
        cells = []
        for j in range(len(names)):
            cells.append("." if i == j else verdict(groups[i], groups[j], alpha=alpha))
        out.append(f"{name:<{width}}  " + "  ".join(f"{c:>{width}}" for c in cells))
    return "\n".join(out) + "\n"


def _load_result(result_dir: str) -> RunResult:
    path = os.path.join(result_dir, "result.json")
    if not os.path.isfile(path):
        raise ArtifactError(path, "no result.json in this directory")
    try:
        with open(path) as fh:
            return RunResult.from_json(fh.read())
    except (json.JSONDecodeError, KeyError) as exc:
        raise ArtifactError(path, f"malformed result.json: {exc}") from exc


def export_reference_table(result_dirs: list = ()) -> str:
    """Published IGD tables (median / maximum / minimum), optionally with
    locally measured experiments inserted under the matching rows.
    Published values are external constants, never recomputed."""
    measured = {}
    for d in result_dirs:
        result = _load_result(d)
        cfg = result.config
        key = (cfg["problem"], cfg["objectives"])
        label = f"measured {cfg['variant']} ({os.path.basename(os.path.normpath(d)) or d})"
        s = result.summary
        measured.setdefault(key, []).append((label, (s["median"], s["worst"], s["best"])))

    def fmt(triple):
        return "  ".join(f"{v:>9.2e}" for v in triple)

    out = ["published IGD, base comparison (median / maximum / minimum):"]
    for (family, m), row in sorted(MAIN_IGD.items()):
        out.append(f"  {family} m={m}")
        for algo in ALGORITHMS_MAIN:
            out.append(f"    {algo:<24} {fmt(row[algo])}")
        for label, triple in measured.get((family, m), []):
            out.append(f"    {label:<24} {fmt(triple)}")
    out.append("published IGD, SBX variant head-to-head (median / maximum / minimum):")
    for (family, m), row in sorted(SBX_COMPARISON_IGD.items()):
        out.append(f"  {family} m={m}")
        for algo in ("wmofss", "wmofss-sbx"):
            out.append(f"    {algo:<24} {fmt(row[algo])}")
        for label, triple in measured.get((family, m), []):
            out.append(f"    {label:<24} {fmt(triple)}")
    return "\n".join(out) + "\n"
