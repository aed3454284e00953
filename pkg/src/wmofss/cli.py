"""Command-line front end.

Subcommands:
  run      execute one experiment and write artifacts to --out
  compare  summarize and rank-test two or more result directories
  tables   print the published IGD tables, optionally with measured runs

`run` options mirror RunConfig one to one. A flat key=value config file
(one pair per line, '#' starts a comment) may set any field; flags given
on the command line win over the file, which wins over built-in defaults.

Exit codes: 0 success, 2 invalid configuration, 3 I/O or artifact failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import fields, replace

from .harness import ArtifactError, ConfigError, RunConfig, compare, export_reference_table, run_experiment

__all__ = ["main", "parse_config_file"]


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _optional(parser):
    def parse(text: str):
        return None if text.strip().lower() == "none" else parser(text)

    return parse


# one parser per RunConfig field; config files and flags share these
_FIELD_PARSERS = {
    "problem": str,
    "objectives": int,
    "k": _optional(int),
    "alpha_bias": float,
    "variant": str,
    "theta": _optional(float),
    "school_size": _optional(int),
    "iterations": int,
    "runs": int,
    "seed": int,
    "p_outer": _optional(int),
    "p_inner": _optional(int),
    "ref_points": _optional(str),
    "step_ind_init": float,
    "step_ind_final": float,
    "step_decay": str,
    "step_vol_factor": float,
    "alpha_sar_init": float,
    "alpha_sar_final": float,
    "eta_c": float,
    "init": str,
    "nadir": str,
    "use_known_ideal": _parse_bool,
    "igd_reference": str,
    "pf_samples": int,
    "write_pf_sample": _parse_bool,
    "jobs": int,
    "out": str,
}
assert set(_FIELD_PARSERS) == {f.name for f in fields(RunConfig)}


def parse_config_file(path: str) -> dict:
    """Read a flat key=value file into a dict of typed RunConfig fields."""
    try:
        with open(path) as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ArtifactError(path, f"cannot read config file: {exc}") from exc
    values = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("config", f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, text = line.partition("=")
        key = key.strip()
        if key not in _FIELD_PARSERS:
            raise ConfigError(key, f"{path}:{lineno}: unknown configuration key")
        try:
            values[key] = _FIELD_PARSERS[key](text.strip())
        except ValueError as exc:
            raise ConfigError(key, f"{path}:{lineno}: {exc}") from exc
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wmofss", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="execute one experiment")
    run_p.add_argument("--config", help="key=value configuration file")
    for field in fields(RunConfig):
        flag = "--" + field.name.replace("_", "-")
        run_p.add_argument(flag, dest=field.name, default=None, metavar=field.name.upper())

    cmp_p = sub.add_parser("compare", help="rank-test result directories")
    cmp_p.add_argument("dirs", nargs="+", help="result directories to compare")
    cmp_p.add_argument("--alpha", type=float, default=0.05, help="significance level (default 0.05)")

    tab_p = sub.add_parser("tables", help="print published IGD tables")
    tab_p.add_argument("dirs", nargs="*", help="result directories to insert alongside")
    return parser


def _run_command(args) -> int:
    values = {}
    if args.config is not None:
        values.update(parse_config_file(args.config))
    for field in fields(RunConfig):
        raw = getattr(args, field.name)
        if raw is None:
            continue
        try:
            values[field.name] = _FIELD_PARSERS[field.name](raw)
        except ValueError as exc:
            raise ConfigError(field.name, str(exc)) from exc
    config = replace(RunConfig(), **values)
    result = run_experiment(config)
    s = result.summary
    print(
        f"{config.problem} m={values.get('objectives', config.objectives)} "
        f"{config.variant}: {s['count']} runs, "
        f"IGD median {s['median']:.4e}, best {s['best']:.4e}, worst {s['worst']:.4e}"
    )
    print(f"artifacts written to {config.out}")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return _run_command(args)
        if args.command == "compare":
            sys.stdout.write(compare(args.dirs, alpha=args.alpha))
            return 0
        sys.stdout.write(export_reference_table(args.dirs))
        return 0
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except (ArtifactError, OSError) as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
