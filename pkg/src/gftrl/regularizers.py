"""Mirror steps for the Euclidean and entropic regularizers.

mirror_argmax solves argmax_{x in X} eta*<x, xtilde> - h(x) in closed form
for the three supported (kind, domain) pairs:

  euclidean + unconstrained  ->  x = eta * xtilde
  euclidean + simplex        ->  Euclidean projection of eta * xtilde
  entropic  + simplex        ->  softmax of eta * xtilde

The entropic map is computed with max-subtraction so that linearly growing
cumulative gradients never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, DomainError, UnboundedError

KINDS = ("euclidean", "entropic")
DOMAINS = ("simplex", "unconstrained")

# Probabilities this small are clamped inside bregman's logarithms only.
LOG_FLOOR = 1e-300


@dataclass(frozen=True)
class RegularizerSpec:
    kind: str
    domain: str
    dim: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError("regularizer kind must be one of %s" % (KINDS,))
        if self.domain not in DOMAINS:
            raise ConfigError("domain must be one of %s" % (DOMAINS,))
        if self.kind == "entropic" and self.domain != "simplex":
            raise ConfigError("entropic regularizer requires the simplex domain")
        if self.dim < 2:
            raise ConfigError("dim must be at least 2")


@dataclass(frozen=True)
class HRange:
    h_max: float
    h_min: float

    @property
    def spread(self) -> float:
        return self.h_max - self.h_min


def simplex_project(v) -> np.ndarray:
    """Euclidean projection onto the probability simplex (sort and threshold)."""
    v = np.asarray(v, dtype=float)
    u = np.sort(v)[::-1]
    css = np.cumsum(u)
    k = np.arange(1, v.size + 1)
    rho = np.nonzero(u * k > css - 1.0)[0][-1]
    theta = (css[rho] - 1.0) / (rho + 1.0)
    return np.maximum(v - theta, 0.0)


def softmax(z) -> np.ndarray:
    z = np.asarray(z, dtype=float)
    e = np.exp(z - z.max())
    return e / e.sum()


def mirror_argmax(reg: RegularizerSpec, eta: float, xtilde) -> np.ndarray:
    """Exact maximizer of eta*<x, xtilde> - h(x) over the domain."""
    if eta <= 0:
        raise ConfigError("eta must be positive")
    z = np.asarray(xtilde, dtype=float)
    if z.shape != (reg.dim,):
        raise DomainError("xtilde has shape %s, want (%d,)" % (z.shape, reg.dim))
    if not np.all(np.isfinite(z)):
        raise DomainError("xtilde must be finite")
    if reg.domain == "unconstrained":
        return eta * z
    if reg.kind == "entropic":
        return softmax(eta * z)
    return simplex_project(eta * z)


def h_value(reg: RegularizerSpec, x) -> float:
    x = np.asarray(x, dtype=float)
    if reg.kind == "euclidean":
        return 0.5 * float(x @ x)
    return float(x @ np.log(np.maximum(x, LOG_FLOOR)))


def grad_h(reg: RegularizerSpec, x) -> np.ndarray:
    """Gradient of h; the dual coordinates used for warm starts."""
    x = np.asarray(x, dtype=float)
    if reg.kind == "euclidean":
        return x.copy()
    if np.min(x) <= 0.0:
        raise DomainError("entropic gradient needs strictly positive mass")
    return np.log(x) + 1.0


def bregman(reg: RegularizerSpec, x, xprime) -> float:
    """h(x) - h(x') - <x - x', grad h(x')>; KL divergence for entropic."""
    x = np.asarray(x, dtype=float)
    xp = np.asarray(xprime, dtype=float)
    if reg.kind == "euclidean":
        d = x - xp
        return 0.5 * float(d @ d)
    if np.min(xp) <= 0.0:
        raise DomainError("entropic bregman needs strictly positive reference")
    ratio = np.log(np.maximum(x, LOG_FLOOR)) - np.log(xp)
    return float(x @ ratio)


def h_range(reg: RegularizerSpec) -> HRange:
    """Extremes of h over the simplex; errors on unconstrained domains."""
    if reg.domain != "simplex":
        raise UnboundedError("h has no finite range on an unconstrained domain")
    d = reg.dim
    if reg.kind == "euclidean":
        return HRange(h_max=0.5, h_min=0.5 / d)
    return HRange(h_max=0.0, h_min=-float(np.log(d)))


def warm_start_range(reg: RegularizerSpec, x1) -> float:
    """Range of the effective regularizer D_h(., x1) of a run started at x1.

    A warm start shifts h by a linear term, turning it into the Bregman
    divergence from x1; its maximum over the simplex sits at a vertex. At
    the uniform start this equals h_range(reg).spread exactly.
    """
    x1 = np.asarray(x1, dtype=float)
    if reg.domain != "simplex":
        raise UnboundedError("effective range needs the simplex domain")
    eye = np.eye(reg.dim)
    return max(bregman(reg, eye[j], x1) for j in range(reg.dim))
