import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gftrl.errors import ConfigError, DomainError
from gftrl.games import matching_pennies, weighted_rps
from gftrl.learners import (DelayBuffer, GftrlLearner, GmdLearner,
                            LearnerConfig, make_learner, run_episode)
from gftrl.regularizers import RegularizerSpec, grad_h, mirror_argmax

EU2 = RegularizerSpec("euclidean", "simplex", 2)
EN3 = RegularizerSpec("entropic", "simplex", 3)
UN2 = RegularizerSpec("euclidean", "unconstrained", 2)


def cfg_of(reg, eta=0.1, m=2, n=3, algorithm="gftrl"):
    return LearnerConfig(eta=eta, delay=m, weight=n, regularizer=reg,
                         algorithm=algorithm)


def test_learner_config_validation():
    with pytest.raises(ConfigError):
        cfg_of(EU2, eta=0.0)
    with pytest.raises(ConfigError):
        cfg_of(EU2, m=-1)
    with pytest.raises(ConfigError):
        cfg_of(EU2, n=-2)
    with pytest.raises(ConfigError):
        cfg_of(EU2, algorithm="gmd")  # mirror twin needs entropic
    cfg_of(EN3, algorithm="gmd")


def test_delay_buffer_window():
    buf = DelayBuffer(2, capacity=3)
    np.testing.assert_array_equal(buf.get(0), [0.0, 0.0])
    np.testing.assert_array_equal(buf.get(-5), [0.0, 0.0])
    for t in range(1, 6):
        buf.push([float(t), -float(t)])
    assert buf.newest_round == 5
    np.testing.assert_array_equal(buf.get(5), [5.0, -5.0])
    np.testing.assert_array_equal(buf.get(3), [3.0, -3.0])
    with pytest.raises(KeyError):
        buf.get(2)  # older than the retained window
    with pytest.raises(KeyError):
        buf.get(6)  # not yet pushed


def test_delay_buffer_shape_check():
    buf = DelayBuffer(2, capacity=2)
    with pytest.raises(DomainError):
        buf.push([1.0, 2.0, 3.0])


def test_default_starts():
    assert np.allclose(GftrlLearner(cfg_of(EU2)).strategy, [0.5, 0.5])
    assert np.allclose(GftrlLearner(cfg_of(EN3)).strategy, [1 / 3] * 3)
    assert np.allclose(GftrlLearner(cfg_of(UN2)).strategy, [0.0, 0.0])
    assert isinstance(make_learner(cfg_of(EN3, algorithm="gmd")), GmdLearner)


def test_init_validation():
    with pytest.raises(ConfigError):
        GftrlLearner(cfg_of(EU2), init=[0.7, 0.7])
    with pytest.raises(ConfigError):
        GftrlLearner(cfg_of(EU2), init=[1.2, -0.2])
    with pytest.raises(ConfigError):
        GftrlLearner(cfg_of(EN3), init=[1.0, 0.0, 0.0])  # boundary start
    GftrlLearner(cfg_of(EU2), init=[1.0, 0.0])  # fine for euclidean


@given(st.integers(0, 4), st.integers(0, 5), st.integers(0, 2**32 - 1))
def test_update_matches_definition(m, n, seed):
    """x^{t+1} must equal the mirror step on the recorded history."""
    rng = np.random.default_rng(seed)
    game = weighted_rps()
    reg = RegularizerSpec("entropic", "simplex", 3)
    cfg = LearnerConfig(eta=0.05, delay=m, weight=n, regularizer=reg)
    T = 30
    trace = run_episode(game, cfg, T)
    for i in range(2):
        u = trace.gradients[i]
        x1 = trace.strategies[i][0]
        offset = grad_h(reg, x1)
        for t in range(1, T):  # check x^{t+1} for t = 1..T-1
            upto = max(t - m, 0)
            s = u[:upto].sum(axis=0)
            matured = u[upto - 1] if upto >= 1 else np.zeros(3)
            z = offset + cfg.eta * (s + n * matured)
            want = mirror_argmax(reg, 1.0, z)
            np.testing.assert_allclose(trace.strategies[i][t], want,
                                       atol=1e-12)
    del rng


def test_episode_determinism():
    game = matching_pennies()
    cfg = cfg_of(EU2, eta=0.01, m=3, n=4)
    init = [[0.6, 0.4], [0.3, 0.7]]
    a = run_episode(game, cfg, 200, init=init)
    b = run_episode(game, cfg, 200, init=init)
    for i in range(2):
        np.testing.assert_array_equal(a.strategies[i], b.strategies[i])
        np.testing.assert_array_equal(a.gradients[i], b.gradients[i])


def test_episode_records_round_one():
    game = matching_pennies()
    init = [[0.6, 0.4], [0.3, 0.7]]
    trace = run_episode(game, cfg_of(EU2), 5, init=init)
    np.testing.assert_allclose(trace.strategies[0][0], [0.6, 0.4])
    np.testing.assert_allclose(trace.gradients[0][0],
                               np.array([[1, -1], [-1, 1]]) @ [0.3, 0.7])
    assert trace.rounds == 5
    assert trace.num_players == 2
    np.testing.assert_allclose(trace.inits[1], [0.3, 0.7])


def test_episode_input_checks():
    game = matching_pennies()
    with pytest.raises(ConfigError):
        run_episode(game, cfg_of(EU2), 0)
    with pytest.raises(ConfigError):
        run_episode(game, [cfg_of(EU2)], 10)  # one config for two players
    bad_reg = RegularizerSpec("euclidean", "simplex", 3)
    with pytest.raises(ConfigError):
        run_episode(game, cfg_of(bad_reg), 10)


def test_warm_start_is_fixed_point_before_feedback():
    """With delay m, the first m rounds bring no usable feedback, so the
    strategy must sit at the start."""
    game = matching_pennies()
    init = [[0.8, 0.2], [0.35, 0.65]]
    m = 4
    trace = run_episode(game, cfg_of(EU2, eta=0.05, m=m, n=1), 20, init=init)
    for i in range(2):
        for t in range(m):
            np.testing.assert_allclose(trace.strategies[i][t], init[i],
                                       atol=1e-12)
        assert not np.allclose(trace.strategies[i][m + 1], init[i])


def test_unconstrained_orthogonal_component_is_preserved():
    """Matching Pennies gradients live on the (1,-1) axis, so the (1,1)
    component of an unconstrained iterate never moves."""
    game = matching_pennies()
    init = [[0.9, 0.1], [0.2, 0.4]]
    trace = run_episode(game, cfg_of(UN2, eta=0.02, m=1, n=2), 300, init=init)
    for i, x in enumerate(trace.strategies):
        along = x @ np.ones(2)
        np.testing.assert_allclose(along, along[0], atol=1e-10)


def test_gmd_initial_strategy_positive():
    with pytest.raises(ConfigError):
        GmdLearner(cfg_of(EN3, algorithm="gmd"), init=[0.5, 0.5, 0.0])
