"""Regret, distance, stability-ledger, and rate diagnostics over run traces.

Conventions used throughout (and by the verification suites):

* Regret comparator. On the simplex the best fixed strategy is a vertex,
  so best = max_j sum_t u_j. On the unconstrained domain the comparator
  is the l1 ball whose radius D_i is the trace's mean l1 norm, giving
  best = D_i * ||sum_t u||_inf.
* Difference sums. The gradient difference sum starts against u^0 = 0
  (the first term is ||u^1||^2); the strategy difference sum starts at
  x^0 = x^1 (the first term is 0).
* Regularizer range. Stability reports use the range of the effective
  regularizer of the run, max over vertices of D_h(vertex, x^1), which
  at the default uniform start equals h_max - h_min exactly. Warm starts
  enlarge it; using the raw h_max - h_min there can understate the
  budget term and produce false violations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, UnsupportedMetricError
from .learners import RunTrace
from .regularizers import h_range, warm_start_range

MP_AXIS = np.array([1.0, -1.0])

RADIUS_FLOOR = 1e-300


@dataclass(frozen=True)
class RegretLedger:
    """Per-player best-comparator and realized payoff sums."""

    best: tuple[float, ...]
    realized: tuple[float, ...]
    total: float

    @property
    def per_player(self) -> tuple[float, ...]:
        return tuple(b - r for b, r in zip(self.best, self.realized))


@dataclass(frozen=True)
class RvuReport:
    """One evaluation of the regret / gradient-variation / strategy-variation
    inequality: lhs <= alpha + beta * sum ||du||^2 - gamma * sum ||dx||^2."""

    lam: float
    alpha: float
    beta: float
    gamma: float
    lhs: float
    rhs: float
    upto: int
    h_spread: float
    holds: bool

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs


@dataclass(frozen=True)
class RateEstimate:
    alpha_hat: float
    alpha_theory: float
    r2: float
    rounds_used: int


def _check_upto(trace: RunTrace, upto) -> int:
    T = trace.rounds
    if upto is None:
        return T
    if not 1 <= upto <= T:
        raise ConfigError("upto must lie in [1, %d]" % T)
    return int(upto)


def total_regret(trace: RunTrace, upto: int | None = None) -> RegretLedger:
    """Total regret of all players after `upto` rounds (default: all)."""
    t = _check_upto(trace, upto)
    best, realized = [], []
    for i in range(trace.num_players):
        u = trace.gradients[i][:t]
        x = trace.strategies[i][:t]
        cum = u.sum(axis=0)
        if trace.configs[i].regularizer.domain == "simplex":
            b = float(cum.max())
        else:
            radius = float(np.abs(x).sum(axis=1).mean())
            b = radius * float(np.abs(cum).max())
        best.append(b)
        realized.append(float((x * u).sum()))
    total = sum(best) - sum(realized)
    return RegretLedger(best=tuple(best), realized=tuple(realized), total=total)


def regret_series(trace: RunTrace, rounds) -> np.ndarray:
    """RegTot(t) evaluated at each requested round (simplex domains only)."""
    rounds = np.asarray(sorted(rounds), dtype=int)
    if rounds.size == 0:
        return np.zeros(0)
    if rounds[0] < 1 or rounds[-1] > trace.rounds:
        raise ConfigError("series rounds outside [1, %d]" % trace.rounds)
    total = np.zeros(rounds.size)
    for i in range(trace.num_players):
        u = trace.gradients[i]
        x = trace.strategies[i]
        if trace.configs[i].regularizer.domain != "simplex":
            raise UnsupportedMetricError("regret series needs simplex domains")
        cum = np.cumsum(u, axis=0)
        realized = np.cumsum((x * u).sum(axis=1))
        idx = rounds - 1
        total += cum[idx].max(axis=1) - realized[idx]
    return total


def distance_to_nash(trace: RunTrace, nash=None) -> np.ndarray:
    """Dis(t) = sqrt(sum_i ||x_i^t - x_i*||^2) for every round.

    Falls back to the game's reference equilibrium. For unconstrained
    two-action runs (the closed-form Matching Pennies analysis) the
    nearest equilibrium lies along c = (1, -1), giving
    Dis = sqrt(sum_i dx_i^2 / 2).
    """
    domains = {cfg.regularizer.domain for cfg in trace.configs}
    if nash is None and domains == {"unconstrained"}:
        if any(x.shape[1] != 2 for x in trace.strategies):
            raise UnsupportedMetricError(
                "nearest-equilibrium rule is defined for two-action games")
        acc = np.zeros(trace.rounds)
        for x in trace.strategies:
            acc += (x @ MP_AXIS) ** 2 / 2.0
        return np.sqrt(acc)
    if nash is None:
        nash = trace.game.nash_reference
    if nash is None:
        raise UnsupportedMetricError("no equilibrium available for this game")
    acc = np.zeros(trace.rounds)
    for i, x in enumerate(trace.strategies):
        star = np.asarray(nash[i], dtype=float)
        acc += ((x - star) ** 2).sum(axis=1)
    return np.sqrt(acc)


def lam_of(m: int) -> float:
    """(m+1)(m+2)/2: the accumulated prediction-error weight of delay m."""
    return (m + 1) * (m + 2) / 2.0


def effective_h_spread(trace: RunTrace) -> float:
    """Range of the effective regularizer, maxed over players.

    Equals h_max - h_min when every player starts at the uniform point.
    """
    out = 0.0
    for i, cfg in enumerate(trace.configs):
        reg = cfg.regularizer
        x1 = trace.inits[i] if trace.inits else trace.strategies[i][0]
        out = max(out, warm_start_range(reg, x1))
    return out


def rvu_check(trace: RunTrace, m: int, upto: int | None = None,
              h_spread: float | None = None, tol: float = 1e-9) -> RvuReport:
    """Evaluate the stability inequality after `upto` rounds.

    Requires every player to run weight n = m + 1 at a shared eta; the
    inequality is proved only there. h_spread defaults to the effective
    regularizer range of the trace (see module docstring).
    """
    etas = {cfg.eta for cfg in trace.configs}
    if len(etas) != 1:
        raise ConfigError("stability check needs a shared eta")
    for cfg in trace.configs:
        if cfg.delay != m or cfg.weight != m + 1:
            raise ConfigError("stability check applies to weight = delay + 1 runs")
    eta = etas.pop()
    t = _check_upto(trace, upto)
    if h_spread is None:
        h_spread = effective_h_spread(trace)

    sum_du = 0.0
    sum_dx = 0.0
    for i in range(trace.num_players):
        u = trace.gradients[i][:t]
        x = trace.strategies[i][:t]
        du = np.diff(u, axis=0, prepend=np.zeros((1, u.shape[1])))
        sum_du += float((du * du).sum())
        dx = np.diff(x, axis=0)
        sum_dx += float((dx * dx).sum())

    lam = lam_of(m)
    alpha = trace.num_players * h_spread / eta
    beta = lam * lam * eta
    gamma = 1.0 / (8.0 * eta)
    lhs = total_regret(trace, upto=t).total
    rhs = alpha + beta * sum_du - gamma * sum_dx
    return RvuReport(lam=lam, alpha=alpha, beta=beta, gamma=gamma, lhs=lhs,
                     rhs=rhs, upto=t, h_spread=h_spread,
                     holds=bool(lhs <= rhs + tol))


def corollary4_eta(m: int, lipschitz: float) -> float:
    """Learning rate 1 / (sqrt(8) * lam * L) that zeroes the strategy-variation
    coefficient of the stability inequality."""
    if lipschitz <= 0:
        raise ConfigError("lipschitz must be positive")
    return 1.0 / (math.sqrt(8.0) * lam_of(m) * lipschitz)


def corollary4_bound(m: int, num_players: int, h_spread: float) -> float:
    """Constant regret bound sqrt(8) * N * lam * h_spread quoted for the
    corollary4_eta rate (h_spread per the documented range convention)."""
    return math.sqrt(8.0) * num_players * lam_of(m) * h_spread


def mp_deltas(trace: RunTrace) -> np.ndarray:
    """(T, 2) array of dx_i = <x_i, (1,-1)> for a two-player two-action run."""
    if trace.num_players != 2 or any(x.shape[1] != 2 for x in trace.strategies):
        raise UnsupportedMetricError("delta projection needs 2 players x 2 actions")
    return np.stack([trace.strategies[0] @ MP_AXIS,
                     trace.strategies[1] @ MP_AXIS], axis=1)


def radius_rate_estimate(source, eta: float, m: int, n: int,
                         burn_in: int | None = None) -> RateEstimate:
    """Fitted exponential rate of the orbit radius, in units of (2*eta)^2.

    source is a RunTrace of an unconstrained two-action run or a (T, 2)
    delta array. The first 10*(m+1) rounds are dropped (delay-buffer
    fill transient); the series is truncated at radius underflow.
    """
    deltas = mp_deltas(source) if isinstance(source, RunTrace) else np.asarray(source)
    radius = np.hypot(deltas[:, 0], deltas[:, 1])
    if burn_in is None:
        burn_in = 10 * (m + 1)
    radius = radius[burn_in:]
    alive = radius > RADIUS_FLOOR
    cut = int(np.argmin(alive)) if not alive.all() else radius.size
    radius = radius[:cut]
    if radius.size < 10:
        raise ConfigError("too few usable rounds after burn-in for a rate fit")
    t = np.arange(radius.size, dtype=float)
    y = np.log(radius)
    a = np.vstack([t, np.ones_like(t)]).T
    coef, *_ = np.linalg.lstsq(a, y, rcond=None)
    fit = a @ coef
    ss_res = float(((y - fit) ** 2).sum())
    ss_tot = float(((y - y.mean()) ** 2).sum())
    r2 = 1.0 if ss_tot == 0 else max(0.0, 1.0 - ss_res / ss_tot)
    return RateEstimate(alpha_hat=float(coef[0]) / (2.0 * eta) ** 2,
                        alpha_theory=m - n + 0.5, r2=r2,
                        rounds_used=int(radius.size))


def zero_sum_residuals(trace: RunTrace) -> np.ndarray:
    """Per-round sum_i <x_i^t, u_i^t>; identically zero for zero-sum games."""
    acc = np.zeros(trace.rounds)
    for i in range(trace.num_players):
        acc += (trace.strategies[i] * trace.gradients[i]).sum(axis=1)
    return acc


def h_range_report(trace: RunTrace) -> dict:
    """Raw and effective regularizer ranges, for bound reporting."""
    regs = [cfg.regularizer for cfg in trace.configs]
    raw = [h_range(r) for r in regs if r.domain == "simplex"]
    return {
        "h_max_raw": max((r.h_max for r in raw), default=float("nan")),
        "h_spread_raw": max((r.spread for r in raw), default=float("nan")),
        "h_spread_effective": effective_h_spread(trace),
    }
