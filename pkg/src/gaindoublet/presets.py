"""Built-in scenario presets.

All presets pin the angular-frequency convention and the default grid
explicitly; nothing is left to ambient defaults. The classic parameter set
(coupling-length product 6 per pump, 1.1 s response time, 0.6 s pulse) is
swept over gain separations of 0, 1, 2 and 4 Hz. The ``sps`` family is the
same physics scaled to a millisecond-response crystal: every time constant
shrinks by the response-time ratio and every detuning grows by its inverse,
leaving the dimensionless products (coupling, separation*tau, t0/tau)
untouched.
"""

from .config import GridSpec, PulseSpec, ScenarioConfig
from .errors import ConfigError
from .medium import ANGULAR, doublet

SEPARATIONS_HZ = (0.0, 1.0, 2.0, 4.0)

STRENGTH_EACH = 6.0
TAU_SLOW = 1.1
T0_SLOW = 0.6
GRID_SLOW = GridSpec(n_samples=8192, dt=0.005)

TAU_FAST = 1e-3  # millisecond-class crystal
_SCALE = TAU_FAST / TAU_SLOW


def _scenario(name, separation, tau, t0, grid, outputs):
    return ScenarioConfig(
        name=name,
        medium=doublet(separation, STRENGTH_EACH, tau, convention=ANGULAR),
        pulse=PulseSpec(t0=t0, peak_time=0.0),
        grid=grid,
        outputs=outputs,
    )


def _slow_family(prefix, outputs):
    return [
        _scenario(f"{prefix}_sep{sep:g}hz", sep, TAU_SLOW, T0_SLOW,
                  GRID_SLOW, outputs)
        for sep in SEPARATIONS_HZ
    ]


def _fast_family():
    grid = GridSpec(n_samples=GRID_SLOW.n_samples, dt=GRID_SLOW.dt * _SCALE)
    return [
        _scenario(f"sps_sep{sep / _SCALE:g}hz", sep / _SCALE, TAU_FAST,
                  T0_SLOW * _SCALE, grid, ("traces", "metrics"))
        for sep in SEPARATIONS_HZ
    ]


_BUILDERS = {
    "fig1": lambda: _slow_family("fig1", ("profile",)),
    "fig2": lambda: _slow_family("fig2", ("traces", "metrics")),
    "fig4": lambda: _slow_family("fig4", ("traces", "metrics")),
    "sps": _fast_family,
}

DESCRIPTIONS = {
    "fig1": "coupling-coefficient profiles at separations 0/1/2/4 Hz",
    "fig2": "pulse propagation at separations 0/1/2/4 Hz (slow crystal)",
    "fig4": "same runs as fig2; counterpart of the bench measurement",
    "sps": "fig2 physics rescaled to a millisecond-response crystal",
}


def preset_names():
    return sorted(_BUILDERS)


def preset(name):
    """All scenario configs of a named preset family."""
    try:
        build = _BUILDERS[name]
    except KeyError:
        raise ConfigError(
            f"unknown preset {name!r}; available: {', '.join(preset_names())}"
        ) from None
    return build()
