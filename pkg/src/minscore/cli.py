"""Command-line interface.

Subcommands:
  simulate  sample series and dump them as a plain numeric CSV
  fit       fit one estimator to a dataset file, print an estimate record
  table     run a replicated efficiency study, write the report CSV (and
            optionally an SVG efficiency chart)
  check     run the built-in consistency oracles

Exit codes: 0 success, 1 validation error (bad flags/config), 2 runtime
failure.  `table` accepts a `key=value` config file; explicit flags override
file entries.
"""

from __future__ import annotations

import argparse
import dataclasses
import re
import sys

import numpy as np

from .inference import EstimateRecord, fit
from .models import params_for, sample_ar1, sample_ma1
from .report import emit_are_svg, emit_csv
from .scores import EstimatorKind
from .selfcheck import run_checks
from .simulate import ConfigError, ExperimentConfig, run_experiment

__all__ = ["cli_main", "main"]

FIT_HEADER = "estimator,estimate,sd,are,boundary"


class _UsageError(Exception):
    """Bad command line; carries the usage text to print."""


class _ArgumentParser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # also treat comma lists like "-0.9,-0.5,0.5" as values, not option names
        self._negative_number_matcher = re.compile(r"^-[0-9.,]+$")

    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(prog="minscore", description=__doc__, add_help=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p_sim = sub.add_parser("simulate",
                           help="sample series and write them as CSV")
    p_sim.add_argument("--model", required=True, choices=["ar1", "ma1"])
    p_sim.add_argument("--param", required=True, type=float,
                       help="dependence parameter (phi or alpha) in (-1, 1)")
    p_sim.add_argument("--nu", type=int, default=200, help="number of series")
    p_sim.add_argument("--t", type=int, default=50, help="series length")
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--out", required=True, help="output CSV path")

    p_fit = sub.add_parser("fit",
                           help="fit one estimator to a dataset CSV")
    p_fit.add_argument("--data", required=True, help="numeric CSV, one series per row")
    p_fit.add_argument("--model", required=True, choices=["ar1", "ma1"])
    p_fit.add_argument("--estimator", required=True,
                       choices=[k.value for k in EstimatorKind])
    p_fit.add_argument("--mc-b", type=int, default=500,
                       help="Monte Carlo draws for the Wishart sd")
    p_fit.add_argument("--seed", type=int, default=0)
    p_fit.add_argument("--out", default=None, help="write the record here instead of stdout")

    p_tab = sub.add_parser("table",
                           help="run a replicated efficiency study")
    p_tab.add_argument("--config", default=None, help="key=value config file")
    p_tab.add_argument("--model", choices=["ar1", "ma1"])
    p_tab.add_argument("--grid", help="comma-separated true parameter values")
    p_tab.add_argument("--nu", type=int)
    p_tab.add_argument("--t", type=int)
    p_tab.add_argument("--replicates", type=int)
    p_tab.add_argument("--mc-b", type=int)
    p_tab.add_argument("--seed", type=int)
    p_tab.add_argument("--estimators",
                       help="comma-separated subset of full,pairwise,hyv,hyv-wishart")
    p_tab.add_argument("--out", help="report CSV path")
    p_tab.add_argument("--svg", default=None, help="optional efficiency chart path")
    p_tab.add_argument("--workers", type=int, default=1)

    sub.add_parser("check",
                   help="run the built-in consistency oracles")
    return parser


def _read_config_file(path: str) -> dict[str, str]:
    entries: dict[str, str] = {}
    try:
        with open(path, "r", encoding="utf-8") as handle:
            for lineno, raw in enumerate(handle, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
                key, value = line.split("=", 1)
                entries[key.strip().lower().replace("-", "_")] = value.strip()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path!r}: {exc}") from exc
    return entries


def _parse_grid(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(",") if v.strip() != "")
    except ValueError as exc:
        raise ConfigError(f"bad grid value in {text!r}: {exc}") from exc


def _parse_estimators(text: str) -> tuple[EstimatorKind, ...]:
    kinds = []
    for name in text.split(","):
        name = name.strip()
        if not name:
            continue
        try:
            kinds.append(EstimatorKind(name))
        except ValueError as exc:
            valid = ",".join(k.value for k in EstimatorKind)
            raise ConfigError(f"unknown estimator {name!r}; valid: {valid}") from exc
    return tuple(kinds)


def _table_config(args) -> tuple[ExperimentConfig, str | None, int]:
    file_entries = _read_config_file(args.config) if args.config else {}

    def pick(flag_value, key, convert, default):
        if flag_value is not None:
            return flag_value
        if key in file_entries:
            try:
                return convert(file_entries[key])
            except ConfigError:
                raise
            except ValueError as exc:
                raise ConfigError(f"bad config value for {key}: {exc}") from exc
        return default

    model = pick(args.model, "model", str, None)
    grid_text = args.grid if args.grid is not None else file_entries.get("grid")
    if model is None or grid_text is None:
        raise ConfigError("table needs at least --model and --grid (flags or config file)")
    estimators_text = (
        args.estimators if args.estimators is not None else file_entries.get("estimators")
    )
    cfg = ExperimentConfig(
        model=model,
        param_grid=_parse_grid(grid_text) if isinstance(grid_text, str) else grid_text,
        nu=pick(args.nu, "nu", int, 200),
        t_len=pick(args.t, "t", int, 50),
        replicates=pick(args.replicates, "replicates", int, 200),
        mc_b=pick(args.mc_b, "mc_b", int, 500),
        seed=pick(args.seed, "seed", int, 0),
        estimators=_parse_estimators(estimators_text) if estimators_text else
        tuple(EstimatorKind),
        out_path=pick(args.out, "out", str, None),
    )
    svg = pick(args.svg, "svg", str, None)
    workers = pick(args.workers if args.workers != 1 else None, "workers", int, 1)
    if cfg.out_path is None:
        raise ConfigError("table needs an output path (--out or out= in the config file)")
    if workers < 1:
        raise ConfigError(f"workers must be >= 1, got {workers}")
    return cfg, svg, workers


def _record_line(record: EstimateRecord) -> str:
    sd = f"{record.sd:.6g}" if record.sd is not None else "nan"
    rel = f"{record.are:.6g}" if record.are is not None else "nan"
    return f"{record.kind.value},{record.estimate:.6g},{sd},{rel},{int(record.boundary_flag)}"


def _cmd_simulate(args) -> int:
    params = params_for(args.model, args.param)
    sampler = sample_ar1 if args.model == "ar1" else sample_ma1
    y = sampler(params, args.nu, args.t, args.seed)
    lines = [",".join(f"{v:.17g}" for v in row) for row in y]
    with open(args.out, "w", encoding="utf-8", newline="") as handle:
        handle.write("\n".join(lines) + "\n")
    return 0


def _cmd_fit(args) -> int:
    try:
        y = np.atleast_2d(np.loadtxt(args.data, delimiter=",", dtype=float))
    except OSError as exc:
        raise ConfigError(f"cannot read data file {args.data!r}: {exc}") from exc
    except ValueError as exc:
        raise ConfigError(f"cannot parse data file {args.data!r}: {exc}") from exc
    kind = EstimatorKind(args.estimator)
    seed_root = np.random.SeedSequence(args.seed)
    sd_mle = None
    if kind is not EstimatorKind.FULL_ML:
        baseline = fit(y, EstimatorKind.FULL_ML, args.model)
        sd_mle = baseline.sd
    record = fit(y, kind, args.model, sd_mle=sd_mle, mc_draws=args.mc_b,
                 seed=np.random.default_rng(seed_root))
    if kind is EstimatorKind.FULL_ML and record.sd is not None:
        record = dataclasses.replace(record, are=1.0)
    text = FIT_HEADER + "\n" + _record_line(record) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_table(args) -> int:
    cfg, svg_path, workers = _table_config(args)
    rows = run_experiment(cfg, workers=workers)
    emit_csv(rows, cfg.out_path)
    if svg_path:
        emit_are_svg(rows, svg_path)
    return 0


def _cmd_check() -> int:
    results = run_checks()
    failed = 0
    for name, passed, message in results:
        status = "ok  " if passed else "FAIL"
        suffix = f"  ({message})" if message else ""
        print(f"{status}  {name}{suffix}")
    failed = sum(1 for _, passed, _ in results if not passed)
    if failed:
        print(f"{failed}/{len(results)} checks failed")
        return 2
    print(f"all {len(results)} checks passed")
    return 0


def cli_main(argv=None) -> int:
    """Entry point returning an exit code (0 ok, 1 validation, 2 runtime)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    try:
        if args.command == "simulate":
            return _cmd_simulate(args)
        if args.command == "fit":
            return _cmd_fit(args)
        if args.command == "table":
            return _cmd_table(args)
        return _cmd_check()
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - runtime failures exit 2
        print(f"runtime failure: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
