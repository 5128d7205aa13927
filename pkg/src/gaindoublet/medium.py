"""Gain-doublet medium model for two-wave mixing in a photorefractive crystal.

Each pump writes one Lorentzian gain line whose half-width is set by the
space-charge rise time. With the line argument x = u*(delta - center)*tau,
where ``u`` converts the Hz detuning into the configured unit convention,
a line of strength G (the coupling-length product) contributes

    gain  : (G/2) * 1 / (1 + x^2)          (dimensionless, field exponent)
    phase : (G/2) * x / (1 + x^2)          (radians)

to the medium transfer exponent. Two pumps tuned symmetrically about the
carrier produce a doublet; the phase slope between the lines flips sign as
the separation grows, turning the medium from normally dispersive (slow
light) to anomalously dispersive (fast light).
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from . import backend
from .errors import ConfigError, TargetSlopeRangeError

ORDINARY = "ordinary-frequency"
ANGULAR = "angular-frequency"

#: Detunings are in Hz throughout; the angular convention applies the line
#: argument x = (2*pi*f)*tau, the ordinary convention x = f*tau. Angular is
#: the default: it is what the coupling formulas state when written against
#: angular frequency, and it is the convention that reproduces the beat and
#: pulse-advance regimes of the reference figures.
DEFAULT_CONVENTION = ANGULAR

_U = {ORDINARY: 1.0, ANGULAR: 2.0 * math.pi}


def angular_factor(convention):
    """Hz-to-line-argument factor u for a convention name."""
    try:
        return _U[convention]
    except KeyError:
        raise ConfigError(
            f"unknown convention {convention!r}; expected one of {sorted(_U)}"
        ) from None


@dataclass(frozen=True)
class GainLine:
    """One pump-induced gain resonance.

    center_offset: pump detuning from the probe carrier (Hz, signed)
    strength: dimensionless coupling-length product (may be negative: loss)
    response_time: space-charge rise time (seconds, > 0)
    """

    center_offset: float
    strength: float
    response_time: float

    def __post_init__(self):
        if not (math.isfinite(self.center_offset) and math.isfinite(self.strength)):
            raise ConfigError("gain line center and strength must be finite")
        if not (math.isfinite(self.response_time) and self.response_time > 0):
            raise ConfigError(
                f"response_time must be positive and finite, got {self.response_time!r}"
            )


@dataclass(frozen=True)
class MediumSpec:
    """A complete medium: one or more gain lines plus bulk parameters.

    ``mean_index`` and ``length`` only matter for the (negligible) geometric
    transit term and for documentation; the coupling exponents already
    include the interaction length through each line's strength.
    """

    lines: tuple
    mean_index: float = 2.4
    length: float = 0.005
    convention: str = DEFAULT_CONVENTION

    def __post_init__(self):
        lines = tuple(self.lines)
        object.__setattr__(self, "lines", lines)
        if len(lines) < 1:
            raise ConfigError("a medium needs at least one gain line")
        if not all(isinstance(ln, GainLine) for ln in lines):
            raise ConfigError("medium lines must be GainLine instances")
        if not (math.isfinite(self.mean_index) and self.mean_index >= 1.0):
            raise ConfigError(f"mean_index must be >= 1, got {self.mean_index!r}")
        if not (math.isfinite(self.length) and self.length > 0):
            raise ConfigError(f"length must be positive, got {self.length!r}")
        angular_factor(self.convention)  # validates

    @property
    def u(self):
        return angular_factor(self.convention)

    def line_arrays(self):
        """(centers, strengths, taus) as float64 arrays for the kernels."""
        centers = np.array([ln.center_offset for ln in self.lines], dtype=np.float64)
        strengths = np.array([ln.strength for ln in self.lines], dtype=np.float64)
        taus = np.array([ln.response_time for ln in self.lines], dtype=np.float64)
        return centers, strengths, taus


def doublet(separation, strength_each, response_time, *, mean_index=2.4,
            length=0.005, convention=DEFAULT_CONVENTION):
    """Symmetric two-line medium with gain separation ``separation`` (Hz).

    The two lines sit at +/- separation/2, with equal strength and response
    time. ``separation`` is the full line-to-line spacing (twice the pump
    offset), the quantity quoted alongside beat frequencies.
    """
    if not (math.isfinite(separation) and separation >= 0):
        raise ConfigError(f"separation must be >= 0, got {separation!r}")
    half = separation / 2.0
    return MediumSpec(
        lines=(
            GainLine(+half, strength_each, response_time),
            GainLine(-half, strength_each, response_time),
        ),
        mean_index=mean_index,
        length=length,
        convention=convention,
    )


@dataclass(frozen=True)
class CouplingProfile:
    """Sampled coupling coefficients over a detuning grid."""

    detunings: np.ndarray
    gamma_in: np.ndarray
    gamma_ph: np.ndarray

    def __post_init__(self):
        if not (len(self.detunings) == len(self.gamma_in) == len(self.gamma_ph)):
            raise ConfigError("profile arrays must have equal length")


def _check_finite(delta):
    arr = np.asarray(delta, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValueError("detuning must be finite")
    return arr


def line_gamma_in(delta, line, convention=DEFAULT_CONVENTION):
    """Intensity-coupling contribution of a single line at detuning ``delta``."""
    arr = _check_finite(delta)
    x = (angular_factor(convention) * line.response_time) * (arr - line.center_offset)
    out = (0.5 * line.strength) / (1.0 + x * x)
    return float(out) if np.isscalar(delta) else out


def line_gamma_ph(delta, line, convention=DEFAULT_CONVENTION):
    """Phase-coupling contribution of a single line (radians)."""
    arr = _check_finite(delta)
    x = (angular_factor(convention) * line.response_time) * (arr - line.center_offset)
    out = (0.5 * line.strength) * x / (1.0 + x * x)
    return float(out) if np.isscalar(delta) else out


def total_coupling(delta, medium):
    """Summed (gamma_in, gamma_ph) of all lines at detuning(s) ``delta``."""
    arr = _check_finite(delta)
    centers, strengths, taus = medium.line_arrays()
    gain, phase = backend.coupling_profile(
        np.atleast_1d(arr), centers, strengths, taus, medium.u
    )
    if np.isscalar(delta):
        return float(gain[0]), float(phase[0])
    return gain, phase


def gamma_ph_slope(delta, medium):
    """Analytic d(gamma_ph)/d(angular frequency) at ``delta``, in seconds.

    This is the group-delay kernel: positive means normal dispersion (slow
    light), negative anomalous (fast light).
    """
    arr = _check_finite(delta)
    centers, strengths, taus = medium.line_arrays()
    slope = backend.phase_slope_profile(
        np.atleast_1d(arr), centers, strengths, taus, medium.u
    )
    if np.isscalar(delta):
        return float(slope[0])
    return slope


def group_delay(medium, delta=0.0):
    """Pulse-peak delay (positive) or advance (negative) vs free space.

    Equal to the phase-coupling slope against angular frequency; the
    geometric transit term (n-1)*d/c is below 1e-10 s for centimeter-scale
    crystals and is excluded.
    """
    return gamma_ph_slope(delta, medium)


def dispersion_profile(medium, grid):
    """Pointwise coupling coefficients over a sorted detuning grid."""
    arr = np.asarray(grid, dtype=np.float64)
    if arr.size == 0:
        raise ConfigError("detuning grid is empty")
    if not np.all(np.isfinite(arr)):
        raise ConfigError("detuning grid contains non-finite values")
    if np.any(np.diff(arr) < 0):
        raise ConfigError("detuning grid must be sorted ascending")
    gain, phase = total_coupling(arr, medium)
    return CouplingProfile(detunings=arr, gamma_in=gain, gamma_ph=phase)


def classify_dispersion(medium, dead_band=1e-12):
    """Sign of the carrier phase slope: 'normal', 'anomalous' or 'flat'.

    ``dead_band`` (seconds) absorbs roundoff around the exact sign-change
    root so the classification does not flap there.
    """
    slope = gamma_ph_slope(0.0, medium)
    if slope > dead_band:
        return "normal"
    if slope < -dead_band:
        return "anomalous"
    return "flat"


def separation_for_target_slope(tau, strength, target_slope,
                                convention=DEFAULT_CONVENTION):
    """Smallest pump offset D >= 0 whose doublet has the requested carrier slope.

    For a symmetric doublet (strength per line, common tau) the carrier
    slope is strength * tau_eff * (1-x^2)/(1+x^2)^2 with x = u*D*tau, which
    decreases monotonically from its maximum at D=0 to its minimum at
    x=sqrt(3); the smallest root always lies in that bracket. Root-finding
    is bracketed and converges to machine precision (well inside 1e-10
    relative). Raises TargetSlopeRangeError outside the attainable range.
    """
    if not (math.isfinite(tau) and tau > 0):
        raise ConfigError(f"tau must be positive, got {tau!r}")
    if not (math.isfinite(strength) and strength > 0):
        raise ConfigError(f"strength must be positive, got {strength!r}")
    if not math.isfinite(target_slope):
        raise ValueError("target slope must be finite")

    u = angular_factor(convention)
    tau_eff = u * tau / (2.0 * math.pi)
    slope_max = strength * tau_eff          # degenerate doublet, x = 0
    slope_min = -strength * tau_eff / 8.0   # x = sqrt(3)
    if not (slope_min <= target_slope <= slope_max):
        raise TargetSlopeRangeError(target_slope, slope_min, slope_max)

    def centered_slope(delta):
        return gamma_ph_slope(
            0.0, doublet(2.0 * delta, strength, tau, convention=convention)
        ) - target_slope

    hi = math.sqrt(3.0) / (u * tau)
    # Range was checked analytically; endpoint residuals of a few ulp mean
    # the target sits at the bracket edge.
    if centered_slope(0.0) <= 0.0:
        return 0.0
    if centered_slope(hi) >= 0.0:
        return hi
    return brentq(centered_slope, 0.0, hi, xtol=1e-15, rtol=8.9e-16)
