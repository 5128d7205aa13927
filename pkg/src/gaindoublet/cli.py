"""Command-line front end.

Exit codes: 0 success, 1 usage/configuration error (nothing written),
2 computation error. Every file-producing run also writes the fully
resolved config next to its outputs so results can be reproduced without
knowing any defaults.
"""

import argparse
import json
import sys
from pathlib import Path

from .config import ScenarioConfig, apply_overrides, read_config
from .errors import ConfigError, ConfigParseError, GainDoubletError
from .heterodyne import LOCKIN_ASSUMPTIONS, ScanSpec, dual_trace, simulate_scan
from .presets import DESCRIPTIONS, preset, preset_names
from .sweep import (profile_for_config, run_config, run_sweep,
                    write_dispersion_csv, write_metrics_csv,
                    write_profile_csv, write_rows_csv, write_svg,
                    write_trace_csv)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _build_parser():
    parser = _Parser(
        prog="gaindoublet",
        description="Pulse propagation and dispersion analysis for a "
                    "bi-frequency-pumped photorefractive gain doublet.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p, index_help="preset entry to use"):
        p.add_argument("--preset", help="preset family name (see 'presets')")
        p.add_argument("--index", type=int, default=0, help=index_help)
        p.add_argument("--config", help="scenario config JSON file")
        p.add_argument("--set", dest="overrides", action="append", default=[],
                       metavar="KEY=VALUE",
                       help="override a config value (dotted path, repeatable)")
        p.add_argument("-o", "--output-dir", default="out",
                       help="directory for output files (default: out)")

    p = sub.add_parser("coeffs", help="emit the coupling-coefficient profile")
    add_source(p)
    p.add_argument("--fmin", type=float, help="profile start detuning (Hz)")
    p.add_argument("--fmax", type=float, help="profile end detuning (Hz)")
    p.add_argument("--points", type=int, default=2001,
                   help="number of profile samples (default 2001)")
    p.add_argument("--svg", action="store_true", help="also write an SVG plot")

    p = sub.add_parser("propagate", help="run one pulse-propagation scenario")
    add_source(p)
    p.add_argument("--svg", action="store_true",
                   help="also write a reference-vs-output SVG plot")

    p = sub.add_parser("sweep", help="sweep the gain separation")
    add_source(p, index_help="preset entry used as sweep base")
    p.add_argument("--separations",
                   help="comma-separated separations in Hz "
                        "(default: the preset family's values)")

    p = sub.add_parser("heterodyne", help="simulate the scanned dispersion "
                                          "measurement")
    add_source(p)
    p.add_argument("--ramp-min", type=float, default=-0.5,
                   help="scan start relative to the pump (Hz, default -0.5)")
    p.add_argument("--ramp-max", type=float, default=0.5,
                   help="scan end relative to the pump (Hz, default 0.5)")
    p.add_argument("--points", type=int, default=201,
                   help="scan samples (default 201)")
    p.add_argument("--pump", type=int, default=None,
                   help="scan only this pump index (default: both pumps)")
    p.add_argument("--svg", action="store_true", help="also write an SVG plot")

    p = sub.add_parser("presets", help="list built-in presets")
    return parser


def _resolve_scenario(args):
    """(config, stem, overrides) from --preset/--config plus --set flags."""
    if args.config and args.preset:
        raise _UsageError("give either --preset or --config, not both")
    if args.config:
        cfg = read_config(args.config)
        stem = Path(args.config).stem
    elif args.preset:
        family = preset(args.preset)
        if not 0 <= args.index < len(family):
            raise _UsageError(
                f"--index {args.index} out of range; preset "
                f"'{args.preset}' has {len(family)} entries"
            )
        cfg = family[args.index]
        stem = f"{args.preset}_{args.index}"
    else:
        raise _UsageError("one of --preset or --config is required")

    if args.overrides:
        data = apply_overrides(cfg.to_dict(), args.overrides)
        cfg = ScenarioConfig.from_dict(data)
    return cfg, stem


def _write_resolved(cfg, overrides, path):
    data = cfg.to_dict()
    data["applied_overrides"] = list(overrides)
    path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n",
                    encoding="utf-8")


def _cmd_presets(args):
    for name in preset_names():
        print(f"{name}: {DESCRIPTIONS[name]}")
        for i, cfg in enumerate(preset(name)):
            seps = sorted({abs(ln.center_offset) * 2 for ln in cfg.medium.lines})
            print(f"  [{i}] {cfg.name}  separation={seps[0]:g} Hz  "
                  f"t0={cfg.pulse.t0:g} s")
    return 0


def _cmd_coeffs(args):
    cfg, stem = _resolve_scenario(args)
    if args.fmin is not None and args.fmax is not None:
        import numpy as np
        from .medium import dispersion_profile
        if args.fmin >= args.fmax:
            raise _UsageError("--fmin must be below --fmax")
        grid = np.linspace(args.fmin, args.fmax, args.points)
        profile = dispersion_profile(cfg.medium, grid)
    else:
        profile = profile_for_config(cfg, n_points=args.points)

    outdir = _ensure_outdir(args.output_dir)
    base = f"coeffs_{stem}"
    write_profile_csv(profile, outdir / f"{base}_profile.csv")
    _write_resolved(cfg, args.overrides, outdir / f"{base}_resolved_config.json")
    if args.svg:
        write_svg(
            [("gamma_in", profile.detunings, profile.gamma_in),
             ("gamma_ph", profile.detunings, profile.gamma_ph)],
            outdir / f"{base}.svg",
            title=f"coupling profile: {cfg.name}",
        )
    print(f"wrote {base}_profile.csv in {outdir}")
    return 0


def _cmd_propagate(args):
    cfg, stem = _resolve_scenario(args)
    wants_run = "traces" in cfg.outputs or "metrics" in cfg.outputs
    result = run_config(cfg) if wants_run else None
    profile = profile_for_config(cfg) if "profile" in cfg.outputs else None

    outdir = _ensure_outdir(args.output_dir)
    base = f"propagate_{stem}"
    if result is not None and "traces" in cfg.outputs:
        write_trace_csv(result.reference, outdir / f"{base}_reference.csv")
        write_trace_csv(result.output, outdir / f"{base}_output.csv")
    if result is not None and "metrics" in cfg.outputs:
        write_metrics_csv(result.metrics, outdir / f"{base}_metrics.csv")
    if profile is not None:
        write_profile_csv(profile, outdir / f"{base}_profile.csv")
    _write_resolved(cfg, args.overrides, outdir / f"{base}_resolved_config.json")
    if args.svg and result is not None:
        t = result.reference.grid.times()
        ref = result.reference.intensity()
        out = result.output.intensity()
        write_svg(
            [("reference", t, ref / ref.max()),
             ("output", t, out / out.max())],
            outdir / f"{base}.svg",
            title=f"propagation: {cfg.name}",
        )
    if result is not None:
        m = result.metrics
        beat = "none" if m.beat_frequency is None else f"{m.beat_frequency:g} Hz"
        print(f"{cfg.name}: peak_shift={m.peak_shift:+.4g} s  "
              f"compression={m.compression_ratio:.4g}  beat={beat}  "
              f"energy_gain={m.energy_gain:.4g}")
    print(f"wrote outputs for {base} in {outdir}")
    return 0


def _cmd_sweep(args):
    cfg, stem = _resolve_scenario(args)
    if args.separations:
        try:
            separations = [float(s) for s in args.separations.split(",") if s]
        except ValueError:
            raise _UsageError(
                f"--separations {args.separations!r} is not a comma-separated "
                "list of numbers"
            ) from None
    elif args.preset:
        separations = sorted({abs(ln.center_offset) * 2
                              for c in preset(args.preset)
                              for ln in c.medium.lines})
    else:
        raise _UsageError("--separations is required with --config")

    rows = run_sweep(cfg, separations)
    outdir = _ensure_outdir(args.output_dir)
    base = f"sweep_{stem}"
    write_rows_csv(rows, outdir / f"{base}_rows.csv")
    _write_resolved(cfg, args.overrides, outdir / f"{base}_resolved_config.json")
    print(f"wrote {len(rows)} sweep rows to {base}_rows.csv in {outdir}")
    return 0


def _cmd_heterodyne(args):
    cfg, stem = _resolve_scenario(args)
    scan = ScanSpec(
        ramp_min=args.ramp_min,
        ramp_max=args.ramp_max,
        n_points=args.points,
        pump_selector=args.pump if args.pump is not None else 0,
    )
    if args.pump is not None:
        traces = [simulate_scan(cfg.medium, scan)]
    else:
        traces = list(dual_trace(cfg.medium, scan))

    outdir = _ensure_outdir(args.output_dir)
    base = f"heterodyne_{stem}"
    names = []
    for trace in traces:
        pump_idx = [ln.center_offset for ln in cfg.medium.lines].index(
            trace.pump_offset)
        name = f"{base}_pump{pump_idx}.csv"
        write_dispersion_csv(trace, scan, outdir / name,
                             assumptions=LOCKIN_ASSUMPTIONS)
        names.append(name)
    _write_resolved(cfg, args.overrides, outdir / f"{base}_resolved_config.json")
    if args.svg:
        write_svg(
            [(f"pump @ {tr.pump_offset:+g} Hz", tr.detunings, tr.phase)
             for tr in traces],
            outdir / f"{base}.svg",
            title=f"dispersion scan: {cfg.name}",
        )
    print(f"wrote {', '.join(names)} in {outdir}")
    return 0


def _ensure_outdir(path):
    outdir = Path(path)
    outdir.mkdir(parents=True, exist_ok=True)
    return outdir


_COMMANDS = {
    "presets": _cmd_presets,
    "coeffs": _cmd_coeffs,
    "propagate": _cmd_propagate,
    "sweep": _cmd_sweep,
    "heterodyne": _cmd_heterodyne,
}


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ConfigParseError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GainDoubletError as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
