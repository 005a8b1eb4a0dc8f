"""Numerical verification suites for the delayed-feedback learning claims.

Each suite re-runs a fixed, documented protocol and checks a quantitative
claim: the closed-form rate law, the exact recurrence equivalence, the
regret regime split and its scaling slopes, the stability (RVU) ledger,
best-iterate convergence on weighted RPS, the mirror-descent twin, the
zero-sum invariants, and the general-sum (Sato) replication. The CLI
`verify` subcommand and the acceptance tests share these functions.

Protocol starts are deliberate and documented here:

* MP_DESK_INIT breaks the symmetry of Matching Pennies (the uniform
  profile is the equilibrium, where every run is identically zero).
* SCALING_INIT starts near the simplex boundary so the orbit radius of
  the eta = 1/sqrt(T) family matches its saturation amplitude at every
  horizon in the grid; small starts put the short horizons in a
  different dynamical regime than the long ones and flatten the fit.
* SIMPLEX3_INIT is a visibly off-center interior point for the
  three-action trajectory protocols.
* DELTA_INIT places the unconstrained runs at projected difference
  (1, 0), the reference start of the closed-form analysis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analytic_mp import run_recurrence
from .errors import ConfigError
from .experiments import (DEFAULT_T_LIST, ExperimentConfig, scaling_study,
                          trajectory_run)
from .games import game_by_name, is_polymatrix_zero_sum
from .learners import LearnerConfig, run_episode
from .metrics import (corollary4_bound, corollary4_eta, effective_h_spread,
                      mp_deltas, radius_rate_estimate, rvu_check, total_regret,
                      zero_sum_residuals)
from .regularizers import RegularizerSpec

MP_DESK_INIT = ((0.55, 0.45), (0.45, 0.55))
SCALING_INIT = ((0.88, 0.12), (0.12, 0.88))
SIMPLEX3_INIT = ((0.2, 0.5, 0.3), (0.2, 0.5, 0.3))
DELTA_INIT = ((0.5, -0.5), (0.0, 0.0))

RATE_GRID = tuple((m, n) for m in (0, 1, 2, 4) for n in (0, 1, 2, 5))


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str


def _mp_unconstrained_trace(eta: float, m: int, n: int, T: int):
    game = game_by_name("matching_pennies")
    cfgs = [LearnerConfig(eta=eta, delay=m, weight=n,
                          regularizer=RegularizerSpec("euclidean",
                                                      "unconstrained", 2))
            for _ in range(2)]
    return run_episode(game, cfgs, T, init=DELTA_INIT)


def _simplex_trace(game_name: str, kind: str, eta: float, m: int, n: int,
                   T: int, init, algorithm: str = "gftrl"):
    game = game_by_name(game_name)
    cfgs = [LearnerConfig(eta=eta, delay=m, weight=n, algorithm=algorithm,
                          regularizer=RegularizerSpec(kind, "simplex", d))
            for d in game.action_counts]
    return run_episode(game, cfgs, T, init=init)


def suite_rate_law(rel_tol: float = 0.05, eta: float = 1e-3,
                   T: int = 10_000) -> list[CheckResult]:
    """Fitted orbit-radius exponent vs m - n + 1/2 over the (m, n) grid."""
    out = []
    for m, n in RATE_GRID:
        trace = _mp_unconstrained_trace(eta, m, n, T)
        est = radius_rate_estimate(trace, eta, m, n)
        err = abs(est.alpha_hat - est.alpha_theory)
        cap = rel_tol * max(1.0, abs(est.alpha_theory))
        out.append(CheckResult(
            "rate_law", "m=%d n=%d" % (m, n), err <= cap,
            "alpha_hat=%.6f theory=%.1f err=%.2e cap=%.2e"
            % (est.alpha_hat, est.alpha_theory, err, cap)))
    return out


def suite_recurrence(sup_tol: float = 1e-12, eta: float = 1e-3,
                     T: int = 10_000) -> list[CheckResult]:
    """Learner trajectory vs the two-variable delayed recurrence."""
    out = []
    for m, n in RATE_GRID:
        trace = _mp_unconstrained_trace(eta, m, n, T)
        deltas = mp_deltas(trace)
        ref = run_recurrence(eta, m, n, T, init=(1.0, 0.0))
        gap = float(np.abs(deltas - ref).max())
        out.append(CheckResult(
            "recurrence", "m=%d n=%d" % (m, n), gap <= sup_tol,
            "sup_gap=%.3e tol=%.0e" % (gap, sup_tol)))
    return out


def _regime_split(game_name: str, kind: str, init, eta: float = 1e-2,
                  T: int = 10_000, ratio_min: float = 10.0,
                  conv_max: float = 0.05, div_min: float = 0.25,
                  suite: str = "regime_split") -> list[CheckResult]:
    conv = _simplex_trace(game_name, kind, eta, 10, 11, 2 * T, init)
    div = _simplex_trace(game_name, kind, eta, 10, 9, 2 * T, init)
    conv_T = total_regret(conv, upto=T).total
    conv_2T = total_regret(conv).total
    div_T = total_regret(div, upto=T).total
    div_2T = total_regret(div).total
    ratio = div_T / conv_T if conv_T > 0 else math.inf
    conv_change = abs(conv_2T - conv_T) / abs(conv_T) if conv_T else math.inf
    div_growth = (div_2T - div_T) / abs(div_T) if div_T else math.inf
    return [
        CheckResult(suite, "band ratio", ratio >= ratio_min,
                    "reg(10,9)=%.4g reg(10,11)=%.4g ratio=%.3g (need >= %g)"
                    % (div_T, conv_T, ratio, ratio_min)),
        CheckResult(suite, "flat low band", conv_change < conv_max,
                    "reg(10,11): %.4g -> %.4g change=%.2f%% (need < %g%%)"
                    % (conv_T, conv_2T, 100 * conv_change, 100 * conv_max)),
        CheckResult(suite, "growing high band", div_growth >= div_min,
                    "reg(10,9): %.4g -> %.4g growth=%.1f%% (need >= %g%%)"
                    % (div_T, div_2T, 100 * div_growth, 100 * div_min)),
    ]


def suite_regime_split(**kw) -> list[CheckResult]:
    """Low band at n = m + 1 vs high band at n = m - 1 on desk-scale MP."""
    return _regime_split("matching_pennies", "euclidean", MP_DESK_INIT, **kw)


def suite_sato_split(**kw) -> list[CheckResult]:
    """The criterion-3 split re-run on the general-sum Sato game, entropic."""
    return _regime_split("sato", "entropic", SIMPLEX3_INIT,
                         suite="sato_split", **kw)


def suite_scaling(lo: float = 0.4, hi: float = 0.6, band: float = 0.1,
                  threads: int = 1) -> list[CheckResult]:
    """Log-log regret slopes under eta = 1/sqrt(T) and constant eta."""
    cfg = ExperimentConfig(game="matching_pennies", regularizer="euclidean",
                           domain="simplex", m=10, n=11, eta=1e-2,
                           init=SCALING_INIT)
    res = scaling_study(cfg, DEFAULT_T_LIST, threads=threads)
    s_inv = res.slopes["inv_sqrt"]
    s_const = res.slopes["const"]
    return [
        CheckResult("scaling", "inv_sqrt slope", lo <= s_inv <= hi,
                    "slope=%.3f (need within [%g, %g])" % (s_inv, lo, hi)),
        CheckResult("scaling", "const slope", -band <= s_const <= band,
                    "slope=%.3f (need within [%+g, %+g])"
                    % (s_const, -band, band)),
    ]


def suite_rvu(m_values=(0, 1, 2, 5, 10), T: int = 10_000,
              checkpoints=(100, 1000, 10_000), tol: float = 1e-9) -> list[CheckResult]:
    """Stability inequality at checkpoints plus the constant regret bound.

    Runs desk-scale simplex-Euclidean Matching Pennies at n = m + 1 and
    eta = corollary4_eta(m, L); the bound uses the effective h-range
    convention documented in the metrics module.
    """
    out = []
    game = game_by_name("matching_pennies")
    for m in m_values:
        eta = corollary4_eta(m, game.lipschitz)
        trace = _simplex_trace("matching_pennies", "euclidean", eta,
                               m, m + 1, T, MP_DESK_INIT)
        worst = math.inf
        for cp in checkpoints:
            rep = rvu_check(trace, m, upto=min(cp, T))
            worst = min(worst, rep.slack)
        out.append(CheckResult(
            "rvu", "slack m=%d" % m, worst >= -tol,
            "min slack over checkpoints=%.4g (eta=%.4g)" % (worst, eta)))
        reg = total_regret(trace).total
        bound = corollary4_bound(m, game.num_players, effective_h_spread(trace))
        out.append(CheckResult(
            "rvu", "constant bound m=%d" % m, reg <= bound + tol,
            "RegTot=%.4g bound=%.4g" % (reg, bound)))
    return out


def suite_rps_trajectory(eta: float = 1e-1, m: int = 4, T: int = 100_000,
                         small: float = 1e-2) -> list[CheckResult]:
    """Best-iterate convergence at n = m + 1, m + 2; divergence below m."""
    cfg = ExperimentConfig(game="weighted_rps", regularizer="entropic",
                           domain="simplex", T=T, eta=eta, m=m,
                           init=SIMPLEX3_INIT)
    res = trajectory_run(cfg, n_list=(3, 4, 5, 6))
    flags = {f.n: f for f in res.flags}
    out = []
    for n in (5, 6):
        f = flags[n]
        hit = f.first_small_round is not None
        out.append(CheckResult(
            "rps_trajectory", "n=%d reaches Dis<%g" % (n, small), hit,
            "min Dis=%.3e at round %d; first below threshold: %s"
            % (f.min_dis, f.argmin_round, f.first_small_round)))
    for n in (3, 4):
        f = flags[n]
        out.append(CheckResult(
            "rps_trajectory", "n=%d diverges" % n, f.final_dis > f.initial_dis,
            "Dis(1)=%.4f Dis(T)=%.4f" % (f.initial_dis, f.final_dis)))
    r5, r6 = flags[5].first_small_round, flags[6].first_small_round
    faster = r5 is not None and r6 is not None and r6 < r5
    out.append(CheckResult(
        "rps_trajectory", "n=6 faster than n=5", faster,
        "rounds to threshold: n=6 %s vs n=5 %s" % (r6, r5)))
    return out


def suite_gmd_twin(sup_tol: float = 1e-9, eta: float = 1e-1, m: int = 4,
                   n: int = 5, T: int = 10_000) -> list[CheckResult]:
    """Entropic learner vs its mirror-descent formulation, same orbit."""
    a = _simplex_trace("weighted_rps", "entropic", eta, m, n, T,
                       SIMPLEX3_INIT, algorithm="gftrl")
    b = _simplex_trace("weighted_rps", "entropic", eta, m, n, T,
                       SIMPLEX3_INIT, algorithm="gmd")
    gap = max(float(np.abs(xa - xb).max())
              for xa, xb in zip(a.strategies, b.strategies))
    return [CheckResult("gmd_twin", "m=%d n=%d iterate gap" % (m, n),
                        gap < sup_tol, "sup_gap=%.3e tol=%.0e" % (gap, sup_tol))]


def suite_zero_sum(tol: float = 1e-9) -> list[CheckResult]:
    """Payoff conservation and nonnegative total regret on zero-sum runs."""
    runs = [
        ("matching_pennies", "euclidean", 1e-2, 10, 11, 10_000, MP_DESK_INIT),
        ("matching_pennies", "euclidean", 1e-2, 10, 9, 10_000, MP_DESK_INIT),
        ("weighted_rps", "entropic", 1e-1, 4, 5, 10_000, SIMPLEX3_INIT),
        ("weighted_rps", "entropic", 1e-1, 4, 3, 10_000, SIMPLEX3_INIT),
    ]
    out = []
    for game_name, kind, eta, m, n, T, init in runs:
        game = game_by_name(game_name)
        if not is_polymatrix_zero_sum(game):
            raise ConfigError("suite expects zero-sum games only")
        trace = _simplex_trace(game_name, kind, eta, m, n, T, init)
        resid = float(np.abs(zero_sum_residuals(trace)).max())
        reg = total_regret(trace).total
        label = "%s (%d,%d)" % (game_name, m, n)
        out.append(CheckResult("zero_sum", label + " conservation",
                               resid <= tol, "max |sum <x,u>|=%.3e" % resid))
        out.append(CheckResult("zero_sum", label + " RegTot >= 0",
                               reg >= -tol, "RegTot=%.6g" % reg))
    return out


SUITES = {
    "rate_law": suite_rate_law,
    "recurrence": suite_recurrence,
    "regime_split": suite_regime_split,
    "scaling": suite_scaling,
    "rvu": suite_rvu,
    "rps_trajectory": suite_rps_trajectory,
    "gmd_twin": suite_gmd_twin,
    "zero_sum": suite_zero_sum,
    "sato_split": suite_sato_split,
}


def run_suite(name: str, **params) -> list[CheckResult]:
    if name not in SUITES:
        raise ConfigError("unknown suite %r (known: %s)"
                          % (name, ", ".join(sorted(SUITES))))
    return SUITES[name](**params)


def format_results(results) -> str:
    lines = []
    for r in results:
        lines.append("[%s] %s %s: %s"
                     % (r.suite, "PASS" if r.passed else "FAIL", r.name, r.detail))
    return "\n".join(lines)
