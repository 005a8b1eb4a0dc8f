"""Command-line front end: episodes, sweeps, and verification suites.

Exit codes: 0 success, 1 verification failure, 2 configuration error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import experiments
from .config import (KNOWN_KEYS, apply_overrides, experiment_config,
                     load_config)
from .errors import ConfigError, GftrlError
from .metrics import distance_to_nash, rvu_check, total_regret
from .verify import SUITES, format_results, run_suite

_KEY_HELP = """\
config keys (file lines and --set overrides, key = value):
  game         matching_pennies | weighted_rps | sato | path to matrix file
  regularizer  euclidean | entropic
  domain       simplex | unconstrained
  T            horizon (positive integer)
  eta          learning rate; under eta_rule=inv_sqrt the scale of 1/sqrt(T)
  eta_rule     const | inv_sqrt
  m            feedback delay (rounds)
  n            prediction weight
  m_range      sweep delays, inclusive lo:hi
  n_range      sweep weights, inclusive lo:hi
  init         uniform | per-player vectors "a,b;c,d"
  seed         accepted for compatibility (dynamics are deterministic)
  out          output CSV path
"""


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gftrl",
        description="Delayed-feedback no-regret learning in matrix games.",
        epilog=_KEY_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="path to a key = value config file")
        p.add_argument("--set", dest="overrides", action="append",
                       metavar="KEY=VALUE", default=[],
                       help="override a config key (repeatable; wins over the file)")
        p.add_argument("--out", help="output CSV path (wins over config)")
        p.add_argument("--threads", type=int, default=1,
                       help="worker processes for grid cells (default 1)")
        return p

    common(sub.add_parser("run", help="single episode with a metrics summary"))
    common(sub.add_parser("sweep", help="regret phase diagram over the (m, n) grid"))
    p = common(sub.add_parser("series", help="running regret for several weights"))
    p.add_argument("--n-list", default="1,3,5,7,9,11,13,15",
                   help="comma-separated weights (default Fig.-style odd grid)")
    p = common(sub.add_parser("scaling", help="final regret vs horizon, both eta rules"))
    p.add_argument("--T-list", dest="T_list", default=None,
                   help="comma-separated horizons (default 10^3..10^5 log grid)")
    p = common(sub.add_parser("trajectory", help="strategy paths plus equilibrium distance"))
    p.add_argument("--n-list", default="3,4,5,6",
                   help="comma-separated weights (default 3,4,5,6)")

    v = sub.add_parser("verify", help="run numerical verification suites")
    v.add_argument("--suite", action="append", default=[],
                   help="suite name or 'all' (repeatable); known: %s"
                        % ", ".join(sorted(SUITES)))
    v.add_argument("--tol", action="append", default=[], metavar="SUITE.PARAM=VALUE",
                   help="override a suite tolerance, e.g. rate_law.rel_tol=0.1")
    v.add_argument("--threads", type=int, default=1)
    return parser


def _experiment_config(args) -> experiments.ExperimentConfig:
    values = load_config(args.config) if args.config else {}
    values = apply_overrides(values, args.overrides)
    if args.out:
        values["out"] = args.out
    return experiment_config(values)


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ConfigError("expected a comma-separated integer list, got %r" % text)


def _cmd_run(args) -> int:
    cfg = _experiment_config(args)
    trace = experiments.run_one(cfg)
    ledger = total_regret(trace)
    eta = cfg.effective_eta()
    print("game=%s regularizer=%s domain=%s" % (cfg.game, cfg.regularizer, cfg.domain))
    print("m=%d n=%d eta=%.6g T=%d" % (cfg.m, cfg.n, eta, cfg.T))
    print("RegTot=%.6g  per-player=%s"
          % (ledger.total, ["%.6g" % r for r in ledger.per_player]))
    try:
        dis = distance_to_nash(trace)
        k = int(np.argmin(dis))
        print("Dis(T)=%.6g  min Dis=%.6g at t=%d" % (dis[-1], dis[k], k + 1))
    except GftrlError:
        pass
    if cfg.n == cfg.m + 1 and cfg.domain == "simplex":
        rep = rvu_check(trace, cfg.m)
        print("stability: lam=%g alpha=%.6g slack=%.6g holds=%s"
              % (rep.lam, rep.alpha, rep.slack, rep.holds))
    if cfg.out:
        rounds = experiments.log_spaced_rounds(cfg.T, experiments.DEFAULT_SERIES_POINTS)
        series = experiments.regret_at_rounds(trace, rounds)
        experiments.write_series_csv(
            cfg.out, [(cfg.n, int(t), float(v)) for t, v in zip(rounds, series)])
        print("wrote %s" % cfg.out)
    return 0


def _cmd_sweep(args) -> int:
    cfg = _experiment_config(args)
    result = experiments.phase_diagram(cfg, threads=args.threads)
    print("%d cells over m=%s n=%s" % (len(result.rows), cfg.m_range, cfg.n_range))
    if cfg.out:
        print("wrote %s" % cfg.out)
    return 0


def _cmd_series(args) -> int:
    cfg = _experiment_config(args)
    rows = experiments.regret_series(cfg, _int_list(args.n_list),
                                     threads=args.threads)
    print("%d series rows (m=%d)" % (len(rows), cfg.m))
    if cfg.out:
        print("wrote %s" % cfg.out)
    return 0


def _cmd_scaling(args) -> int:
    cfg = _experiment_config(args)
    T_list = _int_list(args.T_list) if args.T_list else None
    result = experiments.scaling_study(cfg, T_list, threads=args.threads)
    for rule in sorted(result.slopes):
        print("slope[%s]=%.4f" % (rule, result.slopes[rule]))
    if cfg.out:
        print("wrote %s" % cfg.out)
    return 0


def _cmd_trajectory(args) -> int:
    cfg = _experiment_config(args)
    result = experiments.trajectory_run(cfg, _int_list(args.n_list),
                                        threads=args.threads)
    for f in result.flags:
        print("n=%d converged=%s Dis(1)=%.4g Dis(T)=%.4g min=%.4g"
              % (f.n, f.converged, f.initial_dis, f.final_dis, f.min_dis))
    if cfg.out:
        print("wrote %s" % cfg.out)
    return 0


def _parse_tols(items) -> dict:
    out: dict = {}
    for item in items:
        if "=" not in item or "." not in item.split("=", 1)[0]:
            raise ConfigError("tolerance override %r must look like "
                              "suite.param=value" % item)
        key, _, raw = item.partition("=")
        suite, _, param = key.strip().partition(".")
        try:
            value = float(raw)
        except ValueError:
            raise ConfigError("tolerance value in %r must be numeric" % item)
        out.setdefault(suite, {})[param] = value
    return out


def _cmd_verify(args) -> int:
    names = args.suite or ["all"]
    if "all" in names:
        names = sorted(SUITES)
    tols = _parse_tols(args.tol)
    results = []
    for name in names:
        params = dict(tols.get(name, {}))
        if name == "scaling" and args.threads > 1:
            params["threads"] = args.threads
        results.extend(run_suite(name, **params))
    print(format_results(results))
    failed = [r for r in results if not r.passed]
    print("%d/%d checks passed" % (len(results) - len(failed), len(results)))
    return 1 if failed else 0


_COMMANDS = {
    "run": _cmd_run,
    "sweep": _cmd_sweep,
    "series": _cmd_series,
    "scaling": _cmd_scaling,
    "trajectory": _cmd_trajectory,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        print("config error: %s" % exc, file=sys.stderr)
        return 2
    except GftrlError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
