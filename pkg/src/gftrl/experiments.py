"""Parameter sweeps and episode orchestration with deterministic CSV output.

Protocols covered: the (m, n) regret phase diagram, per-weight regret
series at fixed delay, the regret-vs-horizon scaling study under the
constant and 1/sqrt(T) rate rules, simplex trajectory recording, and the
best-iterate convergence check for zero-sum games.

All emitters sort rows before writing and format floats as %.12g, so two
executions of one config produce identical CSV bytes regardless of the
worker pool schedule.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import ConfigError, UnsupportedMetricError
from .games import GameSpec, game_by_name, is_polymatrix_zero_sum
from .learners import LearnerConfig, RunTrace, run_episode
from .metrics import (corollary4_eta, distance_to_nash, mp_deltas,
                      radius_rate_estimate, regret_series as regret_at_rounds,
                      rvu_check, total_regret)
from .regularizers import RegularizerSpec

LOG_REG_FLOOR = 1e-16
SMALL_DIS = 1e-2

DEFAULT_T_LIST = (1000, 3162, 10000, 31623, 100000)
DEFAULT_SERIES_POINTS = 100
DEFAULT_TRAJECTORY_POINTS = 1000

ETA_RULES = ("const", "inv_sqrt")


@dataclass(frozen=True)
class ExperimentConfig:
    """One experiment protocol: game, learner knobs, grid, and output."""

    game: str = "matching_pennies"
    regularizer: str = "euclidean"
    domain: str = "simplex"
    T: int = 10_000
    eta: float = 1e-2
    eta_rule: str = "const"
    m: int = 10
    n: int = 11
    m_range: tuple[int, int] = (0, 12)
    n_range: tuple[int, int] = (1, 15)
    init: tuple[tuple[float, ...], ...] | None = None
    seed: int | None = None
    out: str | None = None
    track_dis: bool = True
    track_rate: bool = False

    def __post_init__(self):
        if self.T < 1:
            raise ConfigError("T must be at least 1")
        if self.eta <= 0:
            raise ConfigError("eta must be positive")
        if self.eta_rule not in ETA_RULES:
            raise ConfigError("eta_rule must be one of %s" % (ETA_RULES,))
        if self.m < 0 or self.n < 0:
            raise ConfigError("m and n must be nonnegative")
        for lo, hi, name in ((*self.m_range, "m_range"), (*self.n_range, "n_range")):
            if lo < 0 or hi < lo:
                raise ConfigError("%s %s is empty or negative" % (name, (lo, hi)))

    def effective_eta(self, T: int | None = None) -> float:
        """Learning rate under the configured rule; for inv_sqrt the eta
        field is the scale of eta = scale / sqrt(T)."""
        T = self.T if T is None else T
        if self.eta_rule == "inv_sqrt":
            return self.eta / math.sqrt(T)
        return self.eta


@dataclass(frozen=True)
class SweepRow:
    m: int
    n: int
    eta: float
    T: int
    reg_total: float
    log10_reg: float
    final_dis: float
    min_dis: float
    alpha_hat: float | None = None


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[SweepRow, ...]

    def cell(self, m: int, n: int) -> SweepRow:
        for row in self.rows:
            if row.m == m and row.n == n:
                return row
        raise KeyError((m, n))


@dataclass(frozen=True)
class ScalingResult:
    rows: tuple[tuple[int, str, float, float], ...]  # (T, rule, eta, reg_total)
    slopes: dict


@dataclass(frozen=True)
class TrajectoryFlags:
    n: int
    initial_dis: float
    final_dis: float
    min_dis: float
    argmin_round: int
    first_small_round: int | None
    converged: bool


@dataclass(frozen=True)
class TrajectoryResult:
    rows: tuple[tuple, ...]  # (n, t, player, coord_index, value, dis)
    flags: tuple[TrajectoryFlags, ...]


@dataclass(frozen=True)
class BestIterateResult:
    min_dis: float
    argmin_round: int
    running_min: np.ndarray


def build_game(cfg: ExperimentConfig) -> GameSpec:
    return game_by_name(cfg.game)


def learner_configs(cfg: ExperimentConfig, game: GameSpec, eta: float,
                    m: int, n: int) -> list[LearnerConfig]:
    return [
        LearnerConfig(eta=eta, delay=m, weight=n,
                      regularizer=RegularizerSpec(kind=cfg.regularizer,
                                                  domain=cfg.domain, dim=d))
        for d in game.action_counts
    ]


def run_one(cfg: ExperimentConfig, m: int | None = None, n: int | None = None,
            T: int | None = None, eta: float | None = None) -> RunTrace:
    """Single episode under the config, with per-call overrides."""
    game = build_game(cfg)
    T = cfg.T if T is None else T
    eta = cfg.effective_eta(T) if eta is None else eta
    m = cfg.m if m is None else m
    n = cfg.n if n is None else n
    cfgs = learner_configs(cfg, game, eta, m, n)
    return run_episode(game, cfgs, T, init=cfg.init)


def _dis_stats(trace: RunTrace) -> tuple[float, float, int]:
    try:
        dis = distance_to_nash(trace)
    except UnsupportedMetricError:
        return float("nan"), float("nan"), 0
    k = int(np.argmin(dis))
    return float(dis[-1]), float(dis[k]), k + 1


def _cell_row(args) -> SweepRow:
    cfg_fields, m, n = args
    cfg = ExperimentConfig(**cfg_fields)
    trace = run_one(cfg, m=m, n=n)
    reg = total_regret(trace).total
    final_dis, min_dis = float("nan"), float("nan")
    if cfg.track_dis:
        final_dis, min_dis, _ = _dis_stats(trace)
    alpha_hat = None
    if cfg.track_rate and cfg.domain == "unconstrained":
        alpha_hat = radius_rate_estimate(trace, cfg.effective_eta(), m, n).alpha_hat
    return SweepRow(m=m, n=n, eta=cfg.effective_eta(), T=cfg.T, reg_total=reg,
                    log10_reg=math.log10(max(reg, LOG_REG_FLOOR)),
                    final_dis=final_dis, min_dis=min_dis, alpha_hat=alpha_hat)


def _pool_map(fn, jobs, threads: int):
    if threads <= 1 or len(jobs) <= 1:
        return [fn(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, jobs))


def _cfg_fields(cfg: ExperimentConfig) -> dict:
    return {k: getattr(cfg, k) for k in cfg.__dataclass_fields__}


def phase_diagram(cfg: ExperimentConfig, threads: int = 1) -> SweepResult:
    """Final total regret over the (m, n) grid, m-major row order."""
    jobs = [(_cfg_fields(cfg), m, n)
            for m in range(cfg.m_range[0], cfg.m_range[1] + 1)
            for n in range(cfg.n_range[0], cfg.n_range[1] + 1)]
    rows = _pool_map(_cell_row, jobs, threads)
    rows.sort(key=lambda r: (r.m, r.n))
    result = SweepResult(rows=tuple(rows))
    if cfg.out:
        write_phase_diagram_csv(cfg.out, result)
    return result


def log_spaced_rounds(T: int, points: int) -> np.ndarray:
    """Unique integer rounds 1..T, approximately log-uniform."""
    if T <= points:
        return np.arange(1, T + 1)
    g = np.round(np.logspace(0.0, math.log10(T), points)).astype(int)
    g = np.clip(g, 1, T)
    g[-1] = T
    return np.unique(g)


def _series_rows(args):
    cfg_fields, n, rounds = args
    cfg = ExperimentConfig(**cfg_fields)
    trace = run_one(cfg, n=n)
    series = regret_at_rounds(trace, rounds)
    return [(n, int(t), float(v)) for t, v in zip(rounds, series)]


def regret_series(cfg: ExperimentConfig, n_list, threads: int = 1,
                  points: int = DEFAULT_SERIES_POINTS):
    """Running total regret sampled log-uniformly, one series per weight."""
    rounds = log_spaced_rounds(cfg.T, points)
    jobs = [(_cfg_fields(cfg), int(n), rounds) for n in n_list]
    chunks = _pool_map(_series_rows, jobs, threads)
    rows = [row for chunk in chunks for row in chunk]
    rows.sort(key=lambda r: (r[0], r[1]))
    if cfg.out:
        write_series_csv(cfg.out, rows)
    return rows


def _scaling_row(args):
    cfg_fields, T, rule = args
    cfg = replace(ExperimentConfig(**cfg_fields), eta_rule=rule, T=T)
    eta = cfg.effective_eta()
    trace = run_one(cfg)
    return (T, rule, eta, total_regret(trace).total)


def fit_loglog_slope(T_values, reg_values) -> float:
    x = np.log10(np.asarray(T_values, dtype=float))
    y = np.log10(np.clip(np.asarray(reg_values, dtype=float), LOG_REG_FLOOR, None))
    a = np.vstack([x, np.ones_like(x)]).T
    coef, *_ = np.linalg.lstsq(a, y, rcond=None)
    return float(coef[0])


def scaling_study(cfg: ExperimentConfig, T_list=None,
                  threads: int = 1) -> ScalingResult:
    """Final regret against the horizon under both rate rules.

    The inv_sqrt rule runs eta = 1/sqrt(T); the const rule runs the
    config's eta at every horizon. Fitted log-log slopes per rule ride
    along in the result.
    """
    T_list = DEFAULT_T_LIST if T_list is None else tuple(int(t) for t in T_list)
    base = _cfg_fields(cfg)
    base["eta"] = 1.0
    jobs = [(dict(base), T, "inv_sqrt") for T in T_list]
    jobs += [(_cfg_fields(cfg), T, "const") for T in T_list]
    rows = _pool_map(_scaling_row, jobs, threads)
    rows.sort(key=lambda r: (r[0], r[1]))
    slopes = {}
    for rule in ETA_RULES:
        sub = [r for r in rows if r[1] == rule]
        slopes[rule] = fit_loglog_slope([r[0] for r in sub], [r[3] for r in sub])
    result = ScalingResult(rows=tuple(rows), slopes=slopes)
    if cfg.out:
        write_scaling_csv(cfg.out, result)
    return result


def _trajectory_chunk(args):
    cfg_fields, n, rounds = args
    cfg = ExperimentConfig(**cfg_fields)
    trace = run_one(cfg, n=n)
    dis = distance_to_nash(trace)
    k = int(np.argmin(dis))
    below = np.nonzero(dis < SMALL_DIS)[0]
    flags = TrajectoryFlags(
        n=n, initial_dis=float(dis[0]), final_dis=float(dis[-1]),
        min_dis=float(dis[k]), argmin_round=k + 1,
        first_small_round=int(below[0]) + 1 if below.size else None,
        converged=bool(dis[-1] < SMALL_DIS))
    rows = []
    for t in rounds:
        for i, x in enumerate(trace.strategies):
            for j in range(x.shape[1]):
                rows.append((n, int(t), i, j, float(x[t - 1, j]),
                             float(dis[t - 1])))
    return rows, flags


def trajectory_run(cfg: ExperimentConfig, n_list=(3, 4, 5, 6),
                   threads: int = 1,
                   points: int = DEFAULT_TRAJECTORY_POINTS) -> TrajectoryResult:
    """Full strategy paths plus equilibrium distance, one run per weight.

    Convergence flags use the exact per-round distances; the emitted rows
    are subsampled log-uniformly to keep the CSV small.
    """
    rounds = log_spaced_rounds(cfg.T, points)
    jobs = [(_cfg_fields(cfg), int(n), rounds) for n in n_list]
    chunks = _pool_map(_trajectory_chunk, jobs, threads)
    rows = [row for chunk, _ in chunks for row in chunk]
    rows.sort(key=lambda r: (r[0], r[1], r[2], r[3]))
    flags = tuple(sorted((f for _, f in chunks), key=lambda f: f.n))
    result = TrajectoryResult(rows=tuple(rows), flags=flags)
    if cfg.out:
        write_trajectory_csv(cfg.out, result)
    return result


def best_iterate_check(cfg: ExperimentConfig) -> BestIterateResult:
    """Running minimum of the equilibrium distance on a zero-sum run.

    Requires a polymatrix zero-sum game with a reference equilibrium,
    weight n = m + 1, and eta below corollary4_eta(m, L); the running
    minimum is then monotone nonincreasing by construction and expected
    to approach zero along a subsequence.
    """
    game = build_game(cfg)
    if not is_polymatrix_zero_sum(game):
        raise UnsupportedMetricError("best-iterate check needs a zero-sum game")
    if game.nash_reference is None:
        raise UnsupportedMetricError("best-iterate check needs a reference equilibrium")
    if cfg.n != cfg.m + 1:
        raise ConfigError("best-iterate check requires n = m + 1")
    eta = cfg.effective_eta()
    cap = corollary4_eta(cfg.m, game.lipschitz)
    if not eta < cap:
        raise ConfigError("eta %.6g must be below %.6g for this delay" % (eta, cap))
    trace = run_one(cfg)
    dis = distance_to_nash(trace)
    running = np.minimum.accumulate(dis)
    k = int(np.argmin(dis))
    return BestIterateResult(min_dis=float(dis[k]), argmin_round=k + 1,
                             running_min=running)


def _fmt(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return "%.12g" % value


def _write_csv(path: str, header: list[str], rows) -> None:
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def write_phase_diagram_csv(path: str, result: SweepResult) -> None:
    _write_csv(path, ["m", "n", "eta", "T", "reg_total", "log10_reg"],
               [(r.m, r.n, r.eta, r.T, r.reg_total, r.log10_reg)
                for r in result.rows])


def write_series_csv(path: str, rows) -> None:
    _write_csv(path, ["n", "t", "reg_total"], rows)


def write_scaling_csv(path: str, result: ScalingResult) -> None:
    _write_csv(path, ["T", "eta_rule", "eta", "reg_total"], result.rows)


def write_trajectory_csv(path: str, result: TrajectoryResult) -> None:
    _write_csv(path, ["n", "t", "player", "coord_index", "value", "dis"],
               result.rows)
