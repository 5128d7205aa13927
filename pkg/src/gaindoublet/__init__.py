"""Pulse propagation through a bi-frequency-pumped photorefractive gain doublet.

Two frequency-shifted pumps write a pair of Lorentzian gain lines in a
photorefractive crystal. This package evaluates the resulting coupling
coefficients and their dispersion, propagates Gaussian pulses through the
doublet in the frequency domain, extracts delay/advance, compression and
beat metrics, simulates the scanned heterodyne dispersion measurement, and
sweeps the gain separation from the slow-light through the fast-light
regime.
"""

from .backend import BACKEND
from .errors import (ConfigError, ConfigParseError, GainDoubletError,
                     GainOverflowError, PeakAmbiguityError,
                     TargetSlopeRangeError, WindowError)
from .heterodyne import DispersionTrace, ScanSpec, dual_trace, simulate_scan
from .medium import (ANGULAR, DEFAULT_CONVENTION, ORDINARY, CouplingProfile,
                     GainLine, MediumSpec, classify_dispersion,
                     dispersion_profile, doublet, gamma_ph_slope, group_delay,
                     line_gamma_in, line_gamma_ph,
                     separation_for_target_slope, total_coupling)
from .metrics import (PulseMetrics, beat_frequency, centroid_shift,
                      compute_metrics, energy_gain, fwhm, peak_shift)
from .propagate import PropagationResult, apply_medium, run_scenario
from .config import GridSpec, PulseSpec, ScenarioConfig, read_config, write_config
from .presets import preset, preset_names
from .signals import (SampleGrid, Spectrum, TimeTrace, forward_transform,
                      gaussian_pulse, inverse_transform, make_grid)
from .sweep import SweepRow, run_config, run_sweep

__version__ = "0.1.0"

__all__ = [
    "ANGULAR", "BACKEND", "ConfigError", "ConfigParseError",
    "CouplingProfile", "DEFAULT_CONVENTION", "DispersionTrace",
    "GainDoubletError", "GainLine", "GainOverflowError", "GridSpec",
    "MediumSpec", "ORDINARY", "PeakAmbiguityError", "PropagationResult",
    "PulseMetrics", "PulseSpec", "SampleGrid", "ScanSpec", "ScenarioConfig",
    "Spectrum", "SweepRow", "TargetSlopeRangeError", "TimeTrace",
    "WindowError", "apply_medium", "beat_frequency", "centroid_shift",
    "classify_dispersion", "compute_metrics", "dispersion_profile",
    "doublet", "dual_trace", "energy_gain", "forward_transform", "fwhm",
    "gamma_ph_slope", "gaussian_pulse", "group_delay", "inverse_transform",
    "line_gamma_in", "line_gamma_ph", "make_grid", "peak_shift", "preset",
    "preset_names", "read_config", "run_config", "run_scenario", "run_sweep",
    "separation_for_target_slope", "simulate_scan", "total_coupling",
    "write_config",
]
