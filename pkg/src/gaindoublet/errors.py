"""Exception types shared across the package."""


class GainDoubletError(Exception):
    """Base class for all package-specific failures."""


class ConfigError(GainDoubletError):
    """Invalid specification of a medium, grid, pulse, scan or preset."""


class ConfigParseError(ConfigError):
    """A config file or override string could not be parsed.

    Carries the offending key path / line information in the message.
    """


class GainOverflowError(GainDoubletError):
    """The requested medium gain would overflow double precision."""


class WindowError(GainDoubletError):
    """A pulse feature (peak, half-max crossing) hit the window edge."""


class PeakAmbiguityError(GainDoubletError):
    """A trace has two or more co-equal intensity maxima."""


class TargetSlopeRangeError(GainDoubletError):
    """Requested dispersion slope lies outside the attainable range."""

    def __init__(self, target, attainable_min, attainable_max):
        self.target = target
        self.attainable_min = attainable_min
        self.attainable_max = attainable_max
        super().__init__(
            f"target slope {target:g} s is unattainable; the doublet can "
            f"reach [{attainable_min:g}, {attainable_max:g}] s"
        )
