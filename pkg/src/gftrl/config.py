"""Flat key = value config files for the experiment CLI.

Recognized keys:

    game        builtin name (matching_pennies, weighted_rps, sato) or a
                path to a payoff-matrix text file
    regularizer euclidean | entropic
    domain      simplex | unconstrained
    T           horizon, positive integer
    eta         learning rate (or the scale of eta = scale/sqrt(T))
    eta_rule    const | inv_sqrt
    m           feedback delay, nonnegative integer
    n           prediction weight, nonnegative integer
    m_range     sweep rows, "lo:hi" inclusive
    n_range     sweep columns, "lo:hi" inclusive
    init        "uniform" for the default start, or per-player vectors
                "a,b;c,d" (players split by ';', coordinates by ',')
    seed        accepted for compatibility; the dynamics are deterministic
    out         output CSV path

Lines starting with # and blank lines are skipped. Unknown keys are
rejected by name; later assignments override earlier ones, and command
line --set overrides override the file.
"""

from __future__ import annotations

from .errors import ConfigError
from .experiments import ExperimentConfig

_INT_KEYS = {"T", "m", "n", "seed"}
_FLOAT_KEYS = {"eta"}
_STR_KEYS = {"game", "regularizer", "domain", "eta_rule", "out"}
_RANGE_KEYS = {"m_range", "n_range"}

KNOWN_KEYS = sorted(_INT_KEYS | _FLOAT_KEYS | _STR_KEYS | _RANGE_KEYS | {"init"})


def _parse_range(text: str, key: str) -> tuple[int, int]:
    parts = text.split(":")
    if len(parts) != 2:
        raise ConfigError("%s must look like lo:hi, got %r" % (key, text))
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise ConfigError("%s bounds must be integers, got %r" % (key, text))
    return lo, hi


def _parse_init(text: str):
    if text == "uniform":
        return None
    players = []
    for chunk in text.split(";"):
        try:
            players.append(tuple(float(v) for v in chunk.split(",")))
        except ValueError:
            raise ConfigError("init vectors must be numeric, got %r" % chunk)
    if not players or any(len(p) == 0 for p in players):
        raise ConfigError("init must name at least one coordinate per player")
    return tuple(players)


def parse_value(key: str, raw: str):
    raw = raw.strip()
    if key in _INT_KEYS:
        try:
            return int(raw)
        except ValueError:
            raise ConfigError("%s must be an integer, got %r" % (key, raw))
    if key in _FLOAT_KEYS:
        try:
            return float(raw)
        except ValueError:
            raise ConfigError("%s must be a number, got %r" % (key, raw))
    if key in _RANGE_KEYS:
        return _parse_range(raw, key)
    if key == "init":
        return _parse_init(raw)
    if key in _STR_KEYS:
        return raw
    raise ConfigError("unknown config key %r (known: %s)"
                      % (key, ", ".join(KNOWN_KEYS)))


def parse_config_text(text: str, source: str = "<config>") -> dict:
    values = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError("%s:%d: expected key = value, got %r"
                              % (source, lineno, stripped))
        key, _, raw = stripped.partition("=")
        key = key.strip()
        try:
            values[key] = parse_value(key, raw)
        except ConfigError as exc:
            raise ConfigError("%s:%d: %s" % (source, lineno, exc))
    return values


def load_config(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError("cannot read config %s: %s" % (path, exc))
    return parse_config_text(text, source=path)


def apply_overrides(values: dict, overrides) -> dict:
    out = dict(values)
    for item in overrides or []:
        if "=" not in item:
            raise ConfigError("override %r must look like key=value" % item)
        key, _, raw = item.partition("=")
        out[key.strip()] = parse_value(key.strip(), raw)
    return out


def experiment_config(values: dict) -> ExperimentConfig:
    """Build the typed config; the seed key is accepted and recorded but
    the dynamics never consume randomness."""
    return ExperimentConfig(**values)
