"""Pulse metrics: peak shift, width, compression, beat detection, gain."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import PeakAmbiguityError, WindowError

#: A detected beat must reach this fraction of the DC component of the
#: intensity spectrum. Far above numerical ripple (~1e-15 of DC) while
#: still catching the weak residual beats of strongly separated doublets.
BEAT_THRESHOLD = 0.01

#: Two non-adjacent intensity samples within this relative distance of the
#: maximum make the peak location ambiguous.
PEAK_TIE_REL = 1e-9


@dataclass(frozen=True)
class PulseMetrics:
    """Derived quantities of one propagation run.

    peak_shift > 0 means the output peak arrives later than the reference
    (slow light); < 0 means earlier (fast light). ``centroid_shift`` is the
    intensity-centroid counterpart, more robust under reshaping.
    """

    peak_shift: float
    centroid_shift: float
    fwhm_in: float
    fwhm_out: float
    compression_ratio: float
    beat_frequency: Optional[float]
    energy_gain: float


def _peak_index(intensity):
    idx = int(np.argmax(intensity))
    top = intensity[idx]
    ties = np.flatnonzero(intensity >= top * (1.0 - PEAK_TIE_REL))
    if np.any(np.abs(ties - idx) > 1):
        raise PeakAmbiguityError(
            f"co-equal intensity maxima at samples {ties.tolist()}"
        )
    return idx


def peak_location(trace):
    """Sub-sample peak time via 3-point parabolic interpolation."""
    intensity = trace.intensity()
    idx = _peak_index(intensity)
    if idx == 0 or idx == len(intensity) - 1:
        raise WindowError(f"intensity peak sits at the window edge (index {idx})")
    y0, y1, y2 = intensity[idx - 1], intensity[idx], intensity[idx + 1]
    denom = y0 - 2.0 * y1 + y2
    offset = 0.0 if denom == 0.0 else 0.5 * (y0 - y2) / denom
    return (idx + offset - trace.grid.t0_index) * trace.grid.dt


def peak_shift(reference, output):
    """Peak-time difference output - reference (seconds)."""
    if reference.grid != output.grid:
        raise ValueError("traces must share one grid")
    return peak_location(output) - peak_location(reference)


def centroid_location(trace):
    intensity = trace.intensity()
    total = np.sum(intensity)
    if total == 0.0:
        raise ValueError("empty trace has no centroid")
    return float(np.sum(trace.grid.times() * intensity) / total)


def centroid_shift(reference, output):
    """Intensity-centroid difference output - reference (seconds)."""
    if reference.grid != output.grid:
        raise ValueError("traces must share one grid")
    return centroid_location(output) - centroid_location(reference)


def fwhm(trace):
    """Full width at half maximum of the dominant intensity lobe.

    Crossings are linearly interpolated between samples. For modulated
    traces this is deliberately the width of the tallest lobe only.
    """
    intensity = trace.intensity()
    idx = _peak_index(intensity)
    half = intensity[idx] / 2.0
    t = trace.grid.times()

    j = idx
    while j > 0 and intensity[j] > half:
        j -= 1
    if intensity[j] > half:
        raise WindowError("no left half-maximum crossing inside the window")
    left = t[j] + trace.grid.dt * (half - intensity[j]) / (intensity[j + 1] - intensity[j])

    j = idx
    n = len(intensity)
    while j < n - 1 and intensity[j] > half:
        j += 1
    if intensity[j] > half:
        raise WindowError("no right half-maximum crossing inside the window")
    right = t[j - 1] + trace.grid.dt * (half - intensity[j - 1]) / (intensity[j] - intensity[j - 1])
    return float(right - left)


def beat_frequency(trace, threshold=BEAT_THRESHOLD):
    """Dominant intensity-modulation frequency, or None when unmodulated.

    Looks for the strongest local maximum of the intensity magnitude
    spectrum away from DC; it must reach ``threshold`` of the DC component
    to count. The result is a positive multiple of the grid df.
    """
    mag = np.abs(np.fft.rfft(trace.intensity()))
    if mag[0] == 0.0:
        return None
    interior = (mag[1:-1] > mag[:-2]) & (mag[1:-1] >= mag[2:])
    candidates = np.flatnonzero(interior) + 1
    if candidates.size == 0:
        return None
    best = candidates[np.argmax(mag[candidates])]
    if mag[best] <= threshold * mag[0]:
        return None
    return float(best * trace.grid.df)


def energy_gain(reference, output):
    """Ratio of integrated intensities output / reference."""
    if reference.grid != output.grid:
        raise ValueError("traces must share one grid")
    ref = reference.energy()
    if ref == 0.0:
        raise ValueError("reference trace has zero energy")
    return output.energy() / ref


def compute_metrics(reference, output, beat_threshold=BEAT_THRESHOLD):
    """All metrics of an output trace against its free-space reference."""
    width_in = fwhm(reference)
    width_out = fwhm(output)
    return PulseMetrics(
        peak_shift=peak_shift(reference, output),
        centroid_shift=centroid_shift(reference, output),
        fwhm_in=width_in,
        fwhm_out=width_out,
        compression_ratio=width_out / width_in,
        beat_frequency=beat_frequency(output, threshold=beat_threshold),
        energy_gain=energy_gain(reference, output),
    )
