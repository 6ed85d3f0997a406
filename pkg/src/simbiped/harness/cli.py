"""Command line entry points: `simbiped run` and `simbiped sweep`.

Exit codes: 0 completed, 2 the robot fell, 3 the solver went unstable.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from ..errors import ConfigError
from ..gait import GaitParams
from .config import ScenarioConfig, default_config, load_config
from .scenarios import run_scenario


def _parse_value(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def _apply_override(cfg: ScenarioConfig, spec: str) -> ScenarioConfig:
    if "=" not in spec:
        raise ConfigError(spec, "override must look like key=value")
    key, _, raw = spec.partition("=")
    value = _parse_value(raw)
    parts = key.split(".")
    if parts[0] == "gait" and len(parts) == 2:
        return replace(cfg, gait=GaitParams(**{
            **{"t_step": cfg.gait.t_step, "t_m": cfg.gait.t_m,
               "z_fm": cfg.gait.z_fm, "v_d": cfg.gait.v_d},
            parts[1]: value,
        }))
    if parts[0] == "gains" and len(parts) == 2:
        gains = dict(cfg.gains)
        if not isinstance(value, (list, tuple)) or len(value) != 2:
            raise ConfigError(key, "gains override must be [kp, kd]")
        gains[parts[1]] = (float(value[0]), float(value[1]))
        return replace(cfg, gains=gains)
    if len(parts) == 1 and hasattr(cfg, parts[0]):
        return replace(cfg, **{parts[0]: value})
    raise ConfigError(key, "unknown override key")


def _load(args) -> ScenarioConfig:
    if args.config:
        cfg = load_config(args.config)
    else:
        cfg = default_config(args.scenario or "walk_full")
    if args.scenario:
        cfg = default_config(args.scenario, x_init=cfg.x_init) \
            if not args.config else replace(cfg, scenario=args.scenario)
    if args.duration is not None:
        cfg = replace(cfg, duration=args.duration)
    if args.out:
        cfg = replace(cfg, output=args.out)
    for spec in args.override or []:
        cfg = _apply_override(cfg, spec)
    return cfg


def _print_summary(summary):
    print(json.dumps(summary.as_dict(), indent=2))


def cmd_run(args) -> int:
    cfg = _load(args)
    _, summary = run_scenario(cfg)
    _print_summary(summary)
    return summary.exit_code


def cmd_sweep(args) -> int:
    cfg = _load(args)
    try:
        key, lo, hi, n = args.grid.split(":")
        lo, hi, n = float(lo), float(hi), int(n)
    except ValueError:
        raise ConfigError("grid", "expected key:lo:hi:n") from None
    if n < 1:
        raise ConfigError("grid", "n must be >= 1")
    worst = 0
    for i in range(n):
        value = lo if n == 1 else lo + (hi - lo) * i / (n - 1)
        run_cfg = _apply_override(cfg, f"{key}={value}")
        if cfg.output:
            stem, dot, ext = cfg.output.rpartition(".")
            out = f"{stem}_{i:03d}{dot}{ext}" if dot else f"{cfg.output}_{i:03d}"
            run_cfg = replace(run_cfg, output=out)
        _, summary = run_scenario(run_cfg)
        print(f"{key}={value:.6g} -> steps={summary.steps} "
              f"mean_v={summary.mean_velocity:.3f} fell={summary.fell} "
              f"rms={summary.rms_tracking_error:.4f}")
        worst = max(worst, summary.exit_code)
    return worst


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simbiped",
        description="Planar bipedal walking scenarios and tuning rigs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one scenario")
    run.add_argument("--config", help="JSON config path")
    run.add_argument("--scenario", help="scenario id override")
    run.add_argument("--duration", type=float, help="run length in seconds")
    run.add_argument("--out", help="telemetry CSV path")
    run.add_argument("--override", action="append", metavar="KEY=VALUE",
                     help="config override, e.g. gains.hip=[50,0.9]")
    run.set_defaults(func=cmd_run)

    sweep = sub.add_parser("sweep", help="run a 1-D parameter sweep")
    sweep.add_argument("--config", help="JSON config path")
    sweep.add_argument("--scenario", help="scenario id override")
    sweep.add_argument("--duration", type=float)
    sweep.add_argument("--out", help="telemetry CSV stem")
    sweep.add_argument("--override", action="append", metavar="KEY=VALUE")
    sweep.add_argument("--grid", required=True, metavar="KEY:LO:HI:N")
    sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return code


if __name__ == "__main__":
    sys.exit(main())
