"""Scenario configuration: JSON schema, strict parsing, overrides.

A scenario file is a single JSON document. Keys carry their unit in the
name (``t0_s``, ``center_offset_hz``) and unknown keys are rejected with
the full key path, so a typo or a unit mix-up fails loudly instead of
silently falling back to a default.

Schema::

    {
      "name": "run label (used in output file names)",
      "medium": {
        "convention": "angular-frequency" | "ordinary-frequency",
        "mean_index": 2.4,
        "length_m": 0.005,
        "lines": [
          {"center_offset_hz": 1.0, "strength": 6.0, "response_time_s": 1.1}
        ]
      },
      "pulse": {"t0_s": 0.6, "peak_time_s": 0.0},
      "grid": {"n_samples": 8192, "dt_s": 0.005},
      "outputs": ["traces", "metrics", "profile"]
    }
"""

import json
from dataclasses import dataclass

from .errors import ConfigError, ConfigParseError
from .medium import DEFAULT_CONVENTION, GainLine, MediumSpec

KNOWN_OUTPUTS = ("traces", "metrics", "profile")


@dataclass(frozen=True)
class PulseSpec:
    t0: float
    peak_time: float = 0.0


@dataclass(frozen=True)
class GridSpec:
    n_samples: int = 8192
    dt: float = 0.005


@dataclass(frozen=True)
class ScenarioConfig:
    name: str
    medium: MediumSpec
    pulse: PulseSpec
    grid: GridSpec
    outputs: tuple = ("traces", "metrics")

    def __post_init__(self):
        object.__setattr__(self, "outputs", tuple(self.outputs))
        unknown = [o for o in self.outputs if o not in KNOWN_OUTPUTS]
        if unknown:
            raise ConfigError(
                f"unknown outputs {unknown}; expected a subset of {KNOWN_OUTPUTS}"
            )

    def to_dict(self):
        return {
            "name": self.name,
            "medium": {
                "convention": self.medium.convention,
                "mean_index": self.medium.mean_index,
                "length_m": self.medium.length,
                "lines": [
                    {
                        "center_offset_hz": ln.center_offset,
                        "strength": ln.strength,
                        "response_time_s": ln.response_time,
                    }
                    for ln in self.medium.lines
                ],
            },
            "pulse": {"t0_s": self.pulse.t0, "peak_time_s": self.pulse.peak_time},
            "grid": {"n_samples": self.grid.n_samples, "dt_s": self.grid.dt},
            "outputs": list(self.outputs),
        }

    @classmethod
    def from_dict(cls, data):
        top = _Reader(data, path="")
        name = top.get("name", str)

        med = top.sub("medium")
        lines_raw = med.get("lines", list)
        lines = []
        for i, entry in enumerate(lines_raw):
            ln = _Reader(entry, path=f"medium.lines.{i}")
            lines.append(GainLine(
                center_offset=ln.get("center_offset_hz", (int, float)),
                strength=ln.get("strength", (int, float)),
                response_time=ln.get("response_time_s", (int, float)),
            ))
            ln.finish()
        medium = MediumSpec(
            lines=tuple(lines),
            mean_index=med.get("mean_index", (int, float), default=2.4),
            length=med.get("length_m", (int, float), default=0.005),
            convention=med.get("convention", str, default=DEFAULT_CONVENTION),
        )
        med.finish()

        pul = top.sub("pulse")
        pulse = PulseSpec(
            t0=pul.get("t0_s", (int, float)),
            peak_time=pul.get("peak_time_s", (int, float), default=0.0),
        )
        pul.finish()

        grd = top.sub("grid", optional=True)
        if grd is None:
            grid = GridSpec()
        else:
            grid = GridSpec(
                n_samples=grd.get("n_samples", int, default=8192),
                dt=grd.get("dt_s", (int, float), default=0.005),
            )
            grd.finish()

        outputs = top.get("outputs", list, default=["traces", "metrics"])
        top.finish()
        return cls(name=name, medium=medium, pulse=pulse, grid=grid,
                   outputs=tuple(outputs))


class _Reader:
    """Tracks consumed keys of one mapping so leftovers can be rejected."""

    _MISSING = object()

    def __init__(self, data, path):
        if not isinstance(data, dict):
            raise ConfigParseError(
                f"expected an object at '{path or '<root>'}', "
                f"got {type(data).__name__}"
            )
        self._data = data
        self._path = path
        self._seen = set()

    def _full(self, key):
        return f"{self._path}.{key}" if self._path else key

    def get(self, key, types, default=_MISSING):
        self._seen.add(key)
        if key not in self._data:
            if default is not self._MISSING:
                return default
            raise ConfigParseError(f"missing required key '{self._full(key)}'")
        value = self._data[key]
        if isinstance(value, bool) or not isinstance(value, types):
            raise ConfigParseError(
                f"key '{self._full(key)}' has wrong type "
                f"{type(value).__name__}"
            )
        return value

    def sub(self, key, optional=False):
        self._seen.add(key)
        if key not in self._data:
            if optional:
                return None
            raise ConfigParseError(f"missing required key '{self._full(key)}'")
        return _Reader(self._data[key], path=self._full(key))

    def finish(self):
        leftover = sorted(set(self._data) - self._seen)
        if leftover:
            raise ConfigParseError(
                f"unknown key '{self._full(leftover[0])}'"
            )


def read_config(path):
    """Load and validate a scenario config file."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigParseError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}"
        ) from None
    try:
        return ScenarioConfig.from_dict(data)
    except ConfigParseError as exc:
        raise ConfigParseError(f"{path}: {exc}") from None


def write_config(cfg, path):
    """Write a config so that read_config(write_config(cfg)) == cfg."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(cfg.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")


def parse_override(text):
    """Split one 'dotted.path=value' override; value parsed as JSON scalar."""
    key, sep, raw = text.partition("=")
    if not sep or not key:
        raise ConfigParseError(f"override '{text}' is not of the form key=value")
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw  # bare string, e.g. convention names
    return key.strip(), value


def apply_overrides(data, overrides):
    """Apply 'a.b.0.c=value' overrides to a config dict, left to right.

    List positions are addressed by integer path segments. Unknown paths
    raise ConfigParseError; later overrides win over earlier ones.
    """
    for text in overrides:
        key, value = parse_override(text)
        parts = key.split(".")
        node = data
        for depth, part in enumerate(parts[:-1]):
            node = _descend(node, part, ".".join(parts[: depth + 1]))
        _assign(node, parts[-1], value, key)
    return data


def _descend(node, part, path):
    if isinstance(node, list):
        try:
            return node[int(part)]
        except (ValueError, IndexError):
            raise ConfigParseError(f"override path '{path}' is not a valid "
                                   f"list index") from None
    if isinstance(node, dict):
        if part not in node:
            raise ConfigParseError(f"override path '{path}' does not exist")
        return node[part]
    raise ConfigParseError(f"override path '{path}' descends into a scalar")


def _assign(node, part, value, key):
    if isinstance(node, list):
        try:
            node[int(part)] = value
            return
        except (ValueError, IndexError):
            raise ConfigParseError(f"override path '{key}' is not a valid "
                                   f"list index") from None
    if isinstance(node, dict):
        if part not in node:
            raise ConfigParseError(f"override path '{key}' does not exist")
        node[part] = value
        return
    raise ConfigParseError(f"override path '{key}' descends into a scalar")
