"""Closed-form dynamics of unconstrained-Euclidean Matching Pennies.

Projecting both strategies onto c = (1, -1) reduces the coupled learning
update to a real two-variable recurrence with delayed terms:

    dx1' = dx1 + 2(n+1)*eta*dx2[t-m] - 2n*eta*dx2[t-m-1]
    dx2' = dx2 - 2(n+1)*eta*dx1[t-m] + 2n*eta*dx1[t-m-1]

where indices before round 1 read as 0. To leading order in eta the orbit
is a logarithmic spiral: the log-radius advances (m - n + 1/2)(2*eta)^2
per round and the angle theta = atan2(-dx2, dx1) advances 2*eta per round.
The sign of alpha = m - n + 1/2 therefore separates divergence (positive)
from convergence to the equilibrium line (negative).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError

# strategy-difference axis: dx_i = <x_i, (1, -1)>
PROJECTION_AXIS = np.array([1.0, -1.0])


@dataclass(frozen=True)
class DeltaState:
    """Projected pair at round t plus the ring of the last m+2 rounds.

    history[k] holds the pair of round t - m - 1 + k, so history[0] and
    history[1] are exactly the delayed terms the next step consumes;
    rounds before 1 are zero entries.
    """

    dx1: float
    dx2: float
    history: tuple

    @property
    def capacity(self) -> int:
        return len(self.history)


@dataclass(frozen=True)
class PolarApprox:
    log_radius: float
    angle: float


def initial_delta_state(m: int, init=(1.0, 0.0)) -> DeltaState:
    """Round-1 state with zeroed pre-history."""
    if m < 0:
        raise ConfigError("delay must be nonnegative")
    d1, d2 = float(init[0]), float(init[1])
    history = ((0.0, 0.0),) * (m + 1) + ((d1, d2),)
    return DeltaState(dx1=d1, dx2=d2, history=history)


def iterate_recurrence(state: DeltaState, eta: float, m: int, n: int) -> DeltaState:
    """One round of the projected update."""
    if state.capacity != m + 2:
        raise ConfigError("history capacity %d does not match delay %d"
                          % (state.capacity, m))
    lag1, lag0 = state.history[1], state.history[0]
    d1 = state.dx1 + 2.0 * (n + 1) * eta * lag1[1] - 2.0 * n * eta * lag0[1]
    d2 = state.dx2 - 2.0 * (n + 1) * eta * lag1[0] + 2.0 * n * eta * lag0[0]
    return DeltaState(dx1=d1, dx2=d2, history=state.history[1:] + ((d1, d2),))


def run_recurrence(eta: float, m: int, n: int, rounds: int,
                   init=(1.0, 0.0)) -> np.ndarray:
    """(rounds, 2) array of projected pairs for rounds 1..rounds."""
    if rounds < 1:
        raise ConfigError("rounds must be positive")
    d1, d2 = float(init[0]), float(init[1])
    ring = deque([(0.0, 0.0)] * (m + 1), maxlen=m + 2)
    ring.append((d1, d2))
    out = np.empty((rounds, 2))
    out[0] = (d1, d2)
    c1 = 2.0 * (n + 1) * eta
    c0 = 2.0 * n * eta
    for t in range(1, rounds):
        lag0, lag1 = ring[0], ring[1]
        d1, d2 = (d1 + c1 * lag1[1] - c0 * lag0[1],
                  d2 - c1 * lag1[0] + c0 * lag0[0])
        ring.append((d1, d2))
        out[t] = (d1, d2)
    return out


def polar_predict(m: int, n: int, eta: float, t: int,
                  init: PolarApprox = PolarApprox(0.0, 0.0)) -> PolarApprox:
    """Leading-order spiral prediction at round t (t = 1 returns init)."""
    if t < 1:
        raise ConfigError("round index must be positive")
    steps = t - 1
    alpha = m - n + 0.5
    return PolarApprox(
        log_radius=init.log_radius + alpha * (2.0 * eta) ** 2 * steps,
        angle=init.angle + 2.0 * eta * steps,
    )


def deltas_from_polar(p: PolarApprox) -> tuple[float, float]:
    """Invert the polar form: dx1 = e^lam cos(theta), dx2 = -e^lam sin(theta)."""
    r = math.exp(p.log_radius)
    return r * math.cos(p.angle), -r * math.sin(p.angle)


def unwrapped_angles(deltas: np.ndarray) -> np.ndarray:
    """Continuous winding angle atan2(-dx2, dx1) per round.

    Each step adds the principal-branch increment; eta small enough that
    one round never advances by pi keeps the branch choice unambiguous.
    """
    deltas = np.asarray(deltas, dtype=float)
    raw = np.arctan2(-deltas[:, 1], deltas[:, 0])
    return np.unwrap(raw)


def rotation_rate_estimate(deltas: np.ndarray) -> float:
    """Least-squares per-round advance of the unwrapped angle."""
    theta = unwrapped_angles(deltas)
    if theta.size < 3:
        raise ConfigError("need at least 3 rounds to fit a rotation rate")
    t = np.arange(theta.size, dtype=float)
    a = np.vstack([t, np.ones_like(t)]).T
    coef, *_ = np.linalg.lstsq(a, theta, rcond=None)
    return float(coef[0])


def thm1_thm2_verdict(m: int, n: int) -> str:
    """Long-run fate of the orbit by the sign of alpha = m - n + 1/2.

    Positive alpha: the radius grows, strategies spiral outward and the
    regret grows like sqrt(T). Negative alpha: the radius contracts and
    the iterates approach the equilibrium line. Integer (m, n) never land
    on alpha = 0, so "marginal" is reserved for reporting inputs exactly
    on the boundary; |alpha| = 1/2 rows are the adjacent boundary cells
    but still resolve by sign.
    """
    alpha = m - n + 0.5
    if alpha > 0:
        return "diverges"
    if alpha < 0:
        return "converges"
    return "marginal"
