"""Sampled time/frequency signals and the transform pair they share.

Conventions
-----------
The time origin sits at the center of the window (index n/2). Spectra are
stored with signed detuning bins centered on zero: bin k holds detuning
(k - n/2) * df with df = 1/(n*dt). The analysis transform uses the
e^{+i w t} kernel and carries the 1/n factor, the synthesis transform uses
e^{-i w t} and carries none, so

    delaying a trace multiplies bin f by e^{+2i pi f t_delay},

and a medium phase exponent with positive slope against angular frequency
delays the synthesized pulse, matching the physical sign of slow light.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError


@dataclass(frozen=True)
class SampleGrid:
    """Uniform sampling grid shared by a time trace and its spectrum."""

    n_samples: int
    dt: float
    t0_index: int

    @property
    def df(self):
        return 1.0 / (self.n_samples * self.dt)

    @property
    def nyquist(self):
        return 0.5 / self.dt

    @property
    def window(self):
        """Total window span in seconds."""
        return self.n_samples * self.dt

    def times(self):
        return (np.arange(self.n_samples) - self.t0_index) * self.dt

    def frequencies(self):
        return (np.arange(self.n_samples) - self.n_samples // 2) * self.df


def make_grid(n_samples, dt):
    """Centered grid; ``n_samples`` must be a power of two >= 64."""
    if not isinstance(n_samples, (int, np.integer)) or n_samples < 64 \
            or (n_samples & (n_samples - 1)) != 0:
        raise ConfigError(
            f"n_samples must be a power of two >= 64, got {n_samples!r}"
        )
    if not (np.isfinite(dt) and dt > 0):
        raise ConfigError(f"dt must be positive, got {dt!r}")
    return SampleGrid(n_samples=int(n_samples), dt=float(dt),
                      t0_index=int(n_samples) // 2)


@dataclass
class TimeTrace:
    """Complex field envelope sampled on a grid."""

    grid: SampleGrid
    samples: np.ndarray
    label: str = ""

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=np.complex128)
        if self.samples.shape != (self.grid.n_samples,):
            raise ConfigError(
                f"trace length {self.samples.shape} does not match grid "
                f"n_samples={self.grid.n_samples}"
            )
        if not np.all(np.isfinite(self.samples)):
            raise ConfigError("trace samples must be finite")

    def intensity(self):
        return np.abs(self.samples) ** 2

    def energy(self):
        """Integrated intensity, sum |s|^2 * dt."""
        return float(np.sum(self.intensity()) * self.grid.dt)


@dataclass
class Spectrum:
    """Complex spectrum on signed detuning bins centered at zero."""

    grid: SampleGrid
    samples: np.ndarray

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=np.complex128)
        if self.samples.shape != (self.grid.n_samples,):
            raise ConfigError("spectrum length does not match grid")

    def energy(self):
        """Spectral energy in the same units as TimeTrace.energy (Parseval)."""
        return float(np.sum(np.abs(self.samples) ** 2) / self.grid.df)


def gaussian_pulse(t0, peak_time, grid, label="input"):
    """Unit-peak Gaussian field envelope exp(-(t - peak_time)^2 / t0^2).

    The window must span at least 16*t0 so the truncated tails stay below
    1e-10 of the peak.
    """
    if not (np.isfinite(t0) and t0 > 0):
        raise ConfigError(f"t0 must be positive, got {t0!r}")
    span = grid.window
    if span < 16.0 * t0:
        raise ConfigError(
            f"window span {span:g} s is too small for t0={t0:g} s; "
            f"need at least {16.0 * t0:g} s"
        )
    t = grid.times()
    if not (t[0] <= peak_time <= t[-1]):
        raise ConfigError(
            f"peak_time {peak_time:g} s lies outside the window "
            f"[{t[0]:g}, {t[-1]:g}] s"
        )
    samples = np.exp(-((t - peak_time) / t0) ** 2).astype(np.complex128)
    return TimeTrace(grid=grid, samples=samples, label=label)


def forward_transform(trace):
    """Time trace -> spectrum (e^{+i w t} analysis kernel, 1/n factor)."""
    shifted = np.fft.ifftshift(trace.samples)
    spec = np.fft.fftshift(np.fft.ifft(shifted))
    return Spectrum(grid=trace.grid, samples=spec)


def inverse_transform(spec, label=""):
    """Spectrum -> time trace (e^{-i w t} synthesis kernel, unit factor)."""
    shifted = np.fft.ifftshift(spec.samples)
    samples = np.fft.fftshift(np.fft.fft(shifted))
    return TimeTrace(grid=spec.grid, samples=samples, label=label)
