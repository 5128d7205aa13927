"""Signal-level model of the scanned heterodyne dispersion measurement.

A weak signal beam is ramped in frequency across one pump; the lock-in
demodulated output is proportional to the phase shift the medium imprints
on the signal. The proportionality constant is taken as one and the phase
offset as zero (neither is calibrated in the measurement this models), so
the trace is exactly the summed phase-coupling coefficient sampled along
the ramp. The kHz dither that produces the beat is carried as metadata
only; its sideband dynamics add nothing at the demodulated-signal level.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .medium import total_coupling

#: Flags recorded next to exported traces so downstream fits know the
#: demodulation chain was idealized.
LOCKIN_ASSUMPTIONS = {
    "lockin_proportionality": 1.0,
    "lockin_phase_offset_rad": 0.0,
}


@dataclass(frozen=True)
class ScanSpec:
    """Frequency ramp of the signal beam around one pump."""

    ramp_min: float = -0.5
    ramp_max: float = 0.5
    n_points: int = 201
    pump_selector: int = 0
    modulation_frequency: float = 1000.0  # metadata only

    def __post_init__(self):
        if not self.ramp_min < self.ramp_max:
            raise ConfigError(
                f"ramp_min ({self.ramp_min!r}) must be below ramp_max "
                f"({self.ramp_max!r})"
            )
        if self.n_points < 2:
            raise ConfigError(f"n_points must be >= 2, got {self.n_points!r}")


@dataclass(frozen=True)
class DispersionTrace:
    """Demodulated phase vs detuning from the scanned pump."""

    detunings: np.ndarray
    phase: np.ndarray
    pump_offset: float

    def __post_init__(self):
        if len(self.detunings) != len(self.phase):
            raise ConfigError("dispersion trace arrays must have equal length")
        if not np.all(np.isfinite(self.phase)):
            raise ConfigError("dispersion trace phase must be finite")


def simulate_scan(medium, scan):
    """Scan the signal across the selected pump and return the phase trace."""
    if not 0 <= scan.pump_selector < len(medium.lines):
        raise ConfigError(
            f"pump_selector {scan.pump_selector} out of range for a medium "
            f"with {len(medium.lines)} line(s)"
        )
    pump = medium.lines[scan.pump_selector]
    detunings = np.linspace(scan.ramp_min, scan.ramp_max, scan.n_points)
    _, phase = total_coupling(pump.center_offset + detunings, medium)
    return DispersionTrace(
        detunings=detunings,
        phase=phase,
        pump_offset=pump.center_offset,
    )


def dual_trace(medium, scan):
    """Scan both pumps of a two-line medium, lower-frequency pump first."""
    if len(medium.lines) != 2:
        raise ConfigError(
            f"dual_trace needs a two-line medium, got {len(medium.lines)} line(s)"
        )
    order = sorted(range(2), key=lambda i: medium.lines[i].center_offset)
    traces = []
    for selector in order:
        one = ScanSpec(
            ramp_min=scan.ramp_min,
            ramp_max=scan.ramp_max,
            n_points=scan.n_points,
            pump_selector=selector,
            modulation_frequency=scan.modulation_frequency,
        )
        traces.append(simulate_scan(medium, one))
    return tuple(traces)
