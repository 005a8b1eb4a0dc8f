import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gftrl.errors import ConfigError, DomainError, UnboundedError
from gftrl.regularizers import (RegularizerSpec, bregman, grad_h, h_range,
                                h_value, mirror_argmax, simplex_project,
                                softmax, warm_start_range)

vectors = st.lists(st.floats(-50, 50), min_size=2, max_size=6).map(np.asarray)
dims = st.integers(2, 8)


def interior_point(dim, seed):
    rng = np.random.default_rng(seed)
    v = rng.uniform(0.05, 1.0, dim)
    return v / v.sum()


def test_spec_validation():
    with pytest.raises(ConfigError):
        RegularizerSpec("entropic", "unconstrained", 2)
    with pytest.raises(ConfigError):
        RegularizerSpec("cubic", "simplex", 2)
    with pytest.raises(ConfigError):
        RegularizerSpec("euclidean", "simplex", 1)


@given(vectors)
def test_projection_lands_on_simplex(v):
    p = simplex_project(v)
    assert p.min() >= 0.0
    assert p.sum() == pytest.approx(1.0, abs=1e-9)


@given(vectors)
def test_projection_idempotent(v):
    p = simplex_project(v)
    np.testing.assert_allclose(simplex_project(p), p, atol=1e-9)


@given(vectors, st.integers(0, 2**32 - 1))
def test_projection_is_nearest_feasible_point(v, seed):
    p = simplex_project(v)
    q = interior_point(v.size, seed)
    assert np.sum((v - p) ** 2) <= np.sum((v - q) ** 2) + 1e-9


def test_projection_hand_values():
    np.testing.assert_allclose(simplex_project([2.0, 0.0]), [1.0, 0.0])
    np.testing.assert_allclose(simplex_project([0.6, 0.6]), [0.5, 0.5])
    np.testing.assert_allclose(simplex_project([1.0, 0.5, -3.0]),
                               [0.75, 0.25, 0.0])


@given(vectors, st.floats(-20, 20))
def test_softmax_shift_invariance(z, c):
    a = softmax(z)
    b = softmax(z + c)
    np.testing.assert_allclose(a, b, atol=1e-9)
    assert a.sum() == pytest.approx(1.0, abs=1e-12)


def test_softmax_overflow_safe():
    p = softmax(np.array([1e5, 0.0]))
    assert np.isfinite(p).all()
    assert p[0] == pytest.approx(1.0)


@given(vectors, st.floats(0.01, 10.0))
def test_mirror_closed_forms(z, eta):
    d = z.size
    np.testing.assert_allclose(
        mirror_argmax(RegularizerSpec("euclidean", "unconstrained", d), eta, z),
        eta * z)
    np.testing.assert_allclose(
        mirror_argmax(RegularizerSpec("euclidean", "simplex", d), eta, z),
        simplex_project(eta * z))
    np.testing.assert_allclose(
        mirror_argmax(RegularizerSpec("entropic", "simplex", d), eta, z),
        softmax(eta * z))


@given(vectors, st.floats(0.05, 5.0), st.integers(0, 2**32 - 1))
def test_mirror_beats_random_feasible_points(z, eta, seed):
    for kind in ("euclidean", "entropic"):
        reg = RegularizerSpec(kind, "simplex", z.size)
        x = mirror_argmax(reg, eta, z)
        y = interior_point(z.size, seed)

        def objective(p):
            return eta * float(p @ z) - h_value(reg, p)

        assert objective(x) >= objective(y) - 1e-9


def test_mirror_input_checks():
    reg = RegularizerSpec("euclidean", "simplex", 3)
    with pytest.raises(ConfigError):
        mirror_argmax(reg, 0.0, np.zeros(3))
    with pytest.raises(DomainError):
        mirror_argmax(reg, 1.0, np.zeros(4))
    with pytest.raises(DomainError):
        mirror_argmax(reg, 1.0, np.array([np.nan, 0.0, 0.0]))


@given(dims)
def test_h_range_closed_forms(d):
    eu = h_range(RegularizerSpec("euclidean", "simplex", d))
    assert eu.h_max == pytest.approx(0.5)
    assert eu.h_min == pytest.approx(0.5 / d)
    en = h_range(RegularizerSpec("entropic", "simplex", d))
    assert en.h_max == pytest.approx(0.0)
    assert en.h_min == pytest.approx(-np.log(d))
    assert en.spread == pytest.approx(np.log(d))


def test_h_range_unbounded_domain():
    with pytest.raises(UnboundedError):
        h_range(RegularizerSpec("euclidean", "unconstrained", 2))


@given(dims)
def test_warm_start_range_at_uniform_equals_spread(d):
    uniform = np.full(d, 1.0 / d)
    for kind in ("euclidean", "entropic"):
        reg = RegularizerSpec(kind, "simplex", d)
        assert warm_start_range(reg, uniform) == pytest.approx(
            h_range(reg).spread, rel=1e-12)


def test_warm_start_range_grows_off_center():
    reg = RegularizerSpec("entropic", "simplex", 3)
    skew = np.array([0.2, 0.5, 0.3])
    assert warm_start_range(reg, skew) > h_range(reg).spread
    assert warm_start_range(reg, skew) == pytest.approx(-np.log(0.2))


@given(vectors, st.integers(0, 2**32 - 1))
def test_bregman_nonnegative_and_zero_at_equal(v, seed):
    x = simplex_project(v)
    y = interior_point(v.size, seed)
    for kind in ("euclidean", "entropic"):
        reg = RegularizerSpec(kind, "simplex", v.size)
        assert bregman(reg, x, y) >= -1e-12
        assert bregman(reg, y, y) == pytest.approx(0.0, abs=1e-12)


def test_bregman_matches_kl():
    reg = RegularizerSpec("entropic", "simplex", 3)
    x = np.array([0.2, 0.3, 0.5])
    y = np.array([0.25, 0.25, 0.5])
    want = float(np.sum(x * np.log(x / y)))
    assert bregman(reg, x, y) == pytest.approx(want, rel=1e-12)


def test_bregman_boundary_argument_is_finite():
    reg = RegularizerSpec("entropic", "simplex", 2)
    assert np.isfinite(bregman(reg, np.array([1.0, 0.0]), np.array([0.5, 0.5])))
    with pytest.raises(DomainError):
        bregman(reg, np.array([0.5, 0.5]), np.array([1.0, 0.0]))


def test_grad_h_forms():
    eu = RegularizerSpec("euclidean", "simplex", 2)
    np.testing.assert_allclose(grad_h(eu, [0.3, 0.7]), [0.3, 0.7])
    en = RegularizerSpec("entropic", "simplex", 2)
    np.testing.assert_allclose(grad_h(en, [0.5, 0.5]), np.log(0.5) + 1.0)
    with pytest.raises(DomainError):
        grad_h(en, [1.0, 0.0])
