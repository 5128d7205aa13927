"""Scenario execution, separation sweeps, and CSV/SVG persistence.

Output files are deterministic: same config, same bytes. Floats are
written with repr-faithful 17-digit formatting and no locale dependence.
"""

import math
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

import numpy as np

from .config import ScenarioConfig
from .errors import ConfigError
from .medium import dispersion_profile, doublet
from .propagate import run_scenario
from .signals import gaussian_pulse, make_grid

SWEEP_HEADER = ("separation_hz,peak_shift_s,fwhm_in_s,fwhm_out_s,"
                "compression,beat_hz,energy_gain")


@dataclass(frozen=True)
class SweepRow:
    """One sweep point, reduced from a full propagation result."""

    separation: float
    peak_shift: float
    fwhm_in: float
    fwhm_out: float
    compression: float
    beat: Optional[float]
    energy_gain: float


def run_config(cfg):
    """Build grid and pulse from a scenario config and propagate."""
    grid = make_grid(cfg.grid.n_samples, cfg.grid.dt)
    pulse = gaussian_pulse(cfg.pulse.t0, cfg.pulse.peak_time, grid,
                           label="input")
    return run_scenario(pulse, cfg.medium)


def sweep_medium(base, separation):
    """The base doublet with its gain separation replaced."""
    lines = base.medium.lines
    if len(lines) != 2:
        raise ConfigError(
            f"sweeps need a two-line base medium, got {len(lines)} line(s)"
        )
    first = lines[0]
    return doublet(
        separation,
        first.strength,
        first.response_time,
        mean_index=base.medium.mean_index,
        length=base.medium.length,
        convention=base.medium.convention,
    )


def run_sweep(base, separations):
    """One propagation per separation, reduced to SweepRow, input order kept."""
    rows = []
    for sep in separations:
        if not (math.isfinite(sep) and sep >= 0):
            raise ConfigError(f"separations must be >= 0, got {sep!r}")
        cfg = replace(base, medium=sweep_medium(base, sep))
        result = run_config(cfg)
        m = result.metrics
        rows.append(SweepRow(
            separation=float(sep),
            peak_shift=m.peak_shift,
            fwhm_in=m.fwhm_in,
            fwhm_out=m.fwhm_out,
            compression=m.compression_ratio,
            beat=m.beat_frequency,
            energy_gain=m.energy_gain,
        ))
    return rows


def _fmt(value):
    return format(float(value), ".17g")


def write_rows_csv(rows, path):
    """Sweep table; an absent beat becomes an empty field."""
    lines = [SWEEP_HEADER]
    for r in rows:
        beat = "" if r.beat is None else _fmt(r.beat)
        lines.append(",".join([
            _fmt(r.separation), _fmt(r.peak_shift), _fmt(r.fwhm_in),
            _fmt(r.fwhm_out), _fmt(r.compression), beat,
            _fmt(r.energy_gain),
        ]))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_metrics_csv(metrics, path):
    header = ("peak_shift_s,centroid_shift_s,fwhm_in_s,fwhm_out_s,"
              "compression,beat_hz,energy_gain")
    beat = "" if metrics.beat_frequency is None else _fmt(metrics.beat_frequency)
    row = ",".join([
        _fmt(metrics.peak_shift), _fmt(metrics.centroid_shift),
        _fmt(metrics.fwhm_in), _fmt(metrics.fwhm_out),
        _fmt(metrics.compression_ratio), beat, _fmt(metrics.energy_gain),
    ])
    Path(path).write_text(header + "\n" + row + "\n", encoding="utf-8")


def write_trace_csv(trace, path, normalize=True):
    """Two-column intensity trace; peak-normalized by default for plotting."""
    intensity = trace.intensity()
    if normalize:
        top = intensity.max()
        if top > 0:
            intensity = intensity / top
    t = trace.grid.times()
    lines = ["time_s,normalized_intensity" if normalize
             else "time_s,intensity"]
    lines.extend(f"{_fmt(ti)},{_fmt(vi)}" for ti, vi in zip(t, intensity))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_profile_csv(profile, path):
    lines = ["detuning_hz,gamma_in,gamma_ph_rad"]
    lines.extend(
        f"{_fmt(d)},{_fmt(g)},{_fmt(p)}"
        for d, g, p in zip(profile.detunings, profile.gamma_in,
                           profile.gamma_ph)
    )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_dispersion_csv(trace, scan, path, assumptions=None):
    """Heterodyne trace with the idealized-lock-in flags as comment header."""
    lines = [
        f"# pump_offset_hz = {_fmt(trace.pump_offset)}",
        f"# modulation_frequency_hz = {_fmt(scan.modulation_frequency)}",
    ]
    for key, value in sorted((assumptions or {}).items()):
        lines.append(f"# {key} = {_fmt(value)}")
    lines.append("detuning_hz,phase_rad")
    lines.extend(f"{_fmt(d)},{_fmt(p)}"
                 for d, p in zip(trace.detunings, trace.phase))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_results(obj, path, **kwargs):
    """Dispatch to the right writer for rows, traces or profiles."""
    from .medium import CouplingProfile
    from .signals import TimeTrace

    if isinstance(obj, TimeTrace):
        return write_trace_csv(obj, path, **kwargs)
    if isinstance(obj, CouplingProfile):
        return write_profile_csv(obj, path)
    if isinstance(obj, (list, tuple)) and all(isinstance(r, SweepRow) for r in obj):
        return write_rows_csv(obj, path)
    raise ConfigError(f"no writer for {type(obj).__name__}")


def profile_for_config(cfg, span_halfwidths=5.0, n_points=2001):
    """Coupling profile over a span covering all lines plus their wings."""
    centers = [ln.center_offset for ln in cfg.medium.lines]
    width = max(1.0 / (ln.response_time * cfg.medium.u)
                for ln in cfg.medium.lines)
    lo = min(centers) - span_halfwidths * width
    hi = max(centers) + span_halfwidths * width
    grid = np.linspace(lo, hi, n_points)
    return dispersion_profile(cfg.medium, grid)


def write_svg(series, path, title="", width=640, height=400):
    """Minimal deterministic SVG line plot (list of (label, x, y) series)."""
    pad = 46.0
    xs = np.concatenate([np.asarray(x, dtype=float) for _, x, _ in series])
    ys = np.concatenate([np.asarray(y, dtype=float) for _, _, y in series])
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    if x1 == x0:
        x1 = x0 + 1.0
    if y1 == y0:
        y1 = y0 + 1.0

    def sx(v):
        return pad + (v - x0) / (x1 - x0) * (width - 2 * pad)

    def sy(v):
        return height - pad - (v - y0) / (y1 - y0) * (height - 2 * pad)

    colors = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="{pad}" y="{pad}" width="{width - 2 * pad}" '
        f'height="{height - 2 * pad}" fill="none" stroke="#333"/>',
        f'<text x="{width / 2}" y="{pad - 12}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13">{title}</text>',
    ]
    for i, (label, x, y) in enumerate(series):
        pts = " ".join(f"{sx(float(a)):.2f},{sy(float(b)):.2f}"
                       for a, b in zip(x, y))
        color = colors[i % len(colors)]
        parts.append(f'<polyline fill="none" stroke="{color}" '
                     f'stroke-width="1.2" points="{pts}"/>')
        parts.append(f'<text x="{width - pad - 4}" y="{pad + 16 + 14 * i}" '
                     f'text-anchor="end" font-family="sans-serif" '
                     f'font-size="11" fill="{color}">{label}</text>')
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n", encoding="utf-8")
