"""No-regret learning in matrix games under time-delayed full feedback.

The package simulates generalized follow-the-regularized-leader updates
whose optimistic prediction counts the newest observable gradient n
extra times while feedback arrives m rounds late, and verifies the
resulting phase structure: divergence and sqrt(T) regret when
m - n + 1/2 > 0, constant regret and best-iterate convergence when the
weight overshoots the delay (n = m + 1 and beyond, up to the small-eta
regime).
"""

from .analytic_mp import (DeltaState, PolarApprox, initial_delta_state,
                          iterate_recurrence, polar_predict, run_recurrence,
                          rotation_rate_estimate, thm1_thm2_verdict)
from .errors import (ConfigError, DimensionError, DomainError, GftrlError,
                     NoInteriorEquilibriumError, UnboundedError,
                     UnsupportedMetricError)
from .experiments import (ExperimentConfig, best_iterate_check, phase_diagram,
                          regret_series, scaling_study, trajectory_run)
from .games import (GameSpec, game_by_name, gradient, is_polymatrix_zero_sum,
                    load_custom_game, matching_pennies,
                    nash_of_symmetric_zero_sum, payoff_range, sato_game,
                    weighted_rps)
from .learners import (DelayBuffer, GftrlLearner, GmdLearner, LearnerConfig,
                       RunTrace, make_learner, run_episode)
from .metrics import (RateEstimate, RegretLedger, RvuReport, corollary4_bound,
                      corollary4_eta, distance_to_nash, radius_rate_estimate,
                      rvu_check, total_regret)
from .regularizers import (HRange, RegularizerSpec, bregman, h_range,
                           mirror_argmax, simplex_project, softmax,
                           warm_start_range)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
