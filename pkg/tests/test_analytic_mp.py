import math

import numpy as np
import pytest

from gftrl.analytic_mp import (DeltaState, PolarApprox, deltas_from_polar,
                               initial_delta_state, iterate_recurrence,
                               polar_predict, rotation_rate_estimate,
                               run_recurrence, thm1_thm2_verdict,
                               unwrapped_angles)
from gftrl.errors import ConfigError


def test_initial_state_layout():
    s = initial_delta_state(2, init=(1.0, 0.0))
    assert s.dx1 == 1.0 and s.dx2 == 0.0
    assert s.capacity == 4
    assert s.history[:3] == ((0.0, 0.0),) * 3
    assert s.history[-1] == (1.0, 0.0)
    with pytest.raises(ConfigError):
        initial_delta_state(-1)


def test_first_step_all_delayed_terms_prehistory():
    for m in (1, 2, 5):
        s = initial_delta_state(m)
        nxt = iterate_recurrence(s, eta=0.3, m=m, n=4)
        assert (nxt.dx1, nxt.dx2) == (1.0, 0.0)


def test_hand_evaluated_step():
    s = initial_delta_state(0)
    nxt = iterate_recurrence(s, eta=0.25, m=0, n=0)
    assert nxt.dx1 == pytest.approx(1.0)
    assert nxt.dx2 == pytest.approx(-0.5)


def test_capacity_mismatch_rejected():
    s = initial_delta_state(2)
    with pytest.raises(ConfigError):
        iterate_recurrence(s, eta=0.1, m=3, n=1)


def test_run_matches_repeated_iteration():
    for m, n in ((0, 0), (1, 2), (3, 4), (4, 0)):
        eta, T = 0.05, 60
        path = run_recurrence(eta, m, n, T, init=(1.0, 0.0))
        s = initial_delta_state(m)
        got = [(s.dx1, s.dx2)]
        for _ in range(T - 1):
            s = iterate_recurrence(s, eta, m, n)
            got.append((s.dx1, s.dx2))
        np.testing.assert_allclose(path, got, atol=1e-15)


def test_polar_plug_in_values():
    p = polar_predict(0, 1, 1e-3, t=1_000_001)
    assert p.log_radius == pytest.approx(-2.0)
    assert p.angle == pytest.approx(2e-3 * 1e6)
    q = polar_predict(1, 1, 0.01, t=2)
    assert q.log_radius == pytest.approx(0.5 * (0.02) ** 2)
    with pytest.raises(ConfigError):
        polar_predict(0, 0, 0.01, t=0)


def test_polar_round_one_is_init():
    init = PolarApprox(log_radius=0.7, angle=-0.3)
    p = polar_predict(3, 2, 0.01, t=1, init=init)
    assert p == init
    d1, d2 = deltas_from_polar(PolarApprox(0.0, 0.0))
    assert (d1, d2) == (pytest.approx(1.0), pytest.approx(0.0))


def test_polar_tracks_exact_recurrence():
    """Leading-order log-radius within 2% of the exact iteration at T=1e4."""
    eta, T = 1e-3, 10_000
    for m in (0, 1, 2):
        for n in (0, 1, 2, 3):
            path = run_recurrence(eta, m, n, T)
            exact = 0.5 * math.log(path[-1, 0] ** 2 + path[-1, 1] ** 2)
            approx = polar_predict(m, n, eta, T).log_radius
            assert approx == pytest.approx(exact, rel=0.02), (m, n)


def test_rotation_rate_matches_2eta():
    eta = 1e-3
    for m, n in ((0, 0), (1, 1), (2, 3)):
        path = run_recurrence(eta, m, n, 5_000)
        rate = rotation_rate_estimate(path)
        assert rate == pytest.approx(2 * eta, rel=0.01), (m, n)


def test_unwrapped_angles_continuous():
    eta = 1e-2
    path = run_recurrence(eta, 0, 0, 2_000)
    theta = unwrapped_angles(path)
    steps = np.diff(theta)
    assert np.all(np.abs(steps) < np.pi)
    assert theta[-1] - theta[0] > 6.0  # several full windings, no resets


def test_contraction_at_overshoot_weight():
    """n = m + 1 shrinks the radius at small eta for every tested delay."""
    eta, T = 1e-3, 10_000
    for m in range(6):
        path = run_recurrence(eta, m, m + 1, T)
        r0 = math.hypot(*path[0])
        rT = math.hypot(*path[-1])
        assert rT < r0, m


def test_verdict_by_sign():
    assert thm1_thm2_verdict(1, 1) == "diverges"
    assert thm1_thm2_verdict(0, 1) == "converges"
    assert thm1_thm2_verdict(3, 4) == "converges"
    assert thm1_thm2_verdict(10, 9) == "diverges"
    assert thm1_thm2_verdict(0, 0) == "diverges"


def test_delta_state_is_immutable():
    s = initial_delta_state(1)
    with pytest.raises(Exception):
        s.dx1 = 2.0
