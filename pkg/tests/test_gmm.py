import numpy as np
import pytest

from dlcluster import (Dataset, Gmm, Rng, assign, component_densities,
                       gmm_marginal, posterior, weight_std)
from dlcluster.marginal import density_on_grid
from oracles import posterior_naive


def two_component_1d(mu0, mu1, logits=(0.0, 0.0)):
    return Gmm(weight_logits=np.asarray(logits, dtype=float),
               means=np.array([[mu0], [mu1]]),
               log_vars=np.zeros((2, 1)))


def test_component_density_standard_peak():
    model = Gmm(weight_logits=[0.0], means=[[0.0]], log_vars=[[0.0]])
    dens = component_densities(model, np.array([0.0]))
    assert dens[0] == pytest.approx(1 / np.sqrt(2 * np.pi), rel=1e-12)


def test_component_density_translation_equivariance():
    rng = Rng(0)
    means = rng.normal((3, 2))
    lv = rng.normal((3, 2)) * 0.3
    t = np.array([1.5, -2.0])
    x = rng.normal(2)
    a = component_densities(Gmm([0, 0, 0], means, lv), x)
    b = component_densities(Gmm([0, 0, 0], means + t, lv), x + t)
    assert np.allclose(a, b, rtol=1e-12)


def test_identical_components_equal_densities():
    model = Gmm(weight_logits=[0.0, 0.0], means=[[1.0], [1.0]],
                log_vars=[[0.5], [0.5]])
    dens = component_densities(model, np.array([0.3]))
    assert dens[0] == dens[1]


def test_posterior_symmetric_midpoint():
    model = two_component_1d(0.0, 10.0)
    assert np.allclose(posterior(model, np.array([5.0])), [0.5, 0.5])


def test_posterior_single_component():
    model = Gmm(weight_logits=[0.0], means=[[3.0]], log_vars=[[0.2]])
    assert np.allclose(posterior(model, np.array([-1.0])), [1.0])


def test_posterior_log_odds():
    model = two_component_1d(0.0, 4.0)
    gamma = posterior(model, np.array([1.0]))
    assert gamma[0] == pytest.approx(1 / (1 + np.exp(-4.0)), rel=1e-12)


def test_posterior_matches_naive():
    rng = Rng(21)
    for _ in range(10):
        k = int(rng.integers(1, 6))
        d = int(rng.integers(1, 5))
        logits = rng.normal(k)
        means = rng.normal((k, d)) * 2
        lv = rng.normal((k, d)) * 0.4
        model = Gmm(logits, means, lv)
        x = rng.normal(d) * 2
        want = posterior_naive(model.weights(), means, model.variances(), x)
        assert np.allclose(posterior(model, x), want, atol=1e-9)
    assert posterior(model, x).sum() == pytest.approx(1.0, abs=1e-12)


def test_assign_nearest_component():
    model = two_component_1d(0.0, 10.0)
    data = Dataset(points=[[2.0]])
    assert assign(model, data, mode="posterior").labels[0] == 0
    assert assign(model, data, mode="density").labels[0] == 0


def test_assign_modes_agree_with_uniform_weights():
    rng = Rng(2)
    model = Gmm(np.zeros(4), rng.normal((4, 3)) * 3, rng.normal((4, 3)) * 0.2)
    data = Dataset(points=rng.normal((60, 3)) * 3)
    a = assign(model, data, mode="posterior").labels
    b = assign(model, data, mode="density").labels
    assert np.array_equal(a, b)


def test_assign_invariant_under_logit_shift():
    rng = Rng(8)
    logits = rng.normal(3)
    means = rng.normal((3, 2)) * 2
    lv = rng.normal((3, 2)) * 0.3
    data = Dataset(points=rng.normal((40, 2)) * 2)
    a = assign(Gmm(logits, means, lv), data).labels
    b = assign(Gmm(logits + 17.0, means, lv), data).labels
    assert np.array_equal(a, b)


def test_assign_responsibility_rows():
    rng = Rng(14)
    model = Gmm(rng.normal(3), rng.normal((3, 2)), rng.normal((3, 2)) * 0.2)
    data = Dataset(points=rng.normal((30, 2)))
    result = assign(model, data)
    assert np.allclose(result.responsibilities.sum(axis=1), 1.0, atol=1e-9)
    assert np.array_equal(result.labels,
                          np.argmax(result.responsibilities, axis=1))


def test_softmax_extreme_logits():
    model = Gmm(np.array([50.0, -50.0, 0.0]), np.zeros((3, 1)),
                np.zeros((3, 1)))
    w = model.weights()
    assert abs(w.sum() - 1.0) <= 1e-12
    assert np.all(w > 0)


def test_marginal_axis_and_quadratic_form():
    model = Gmm([0.0], [[1.0, 2.0]], np.log([[1.0, 4.0]]))
    mix = gmm_marginal(model, np.array([0.0, 1.0]))
    assert mix.means[0] == 2.0 and mix.vars[0] == 4.0
    mix = gmm_marginal(model, np.array([0.6, 0.8]))
    assert mix.vars[0] == pytest.approx(0.36 + 0.64 * 4.0, rel=1e-12)


def test_marginal_mean_linearity():
    rng = Rng(5)
    model = Gmm(rng.normal(3), rng.normal((3, 4)), rng.normal((3, 4)) * 0.2)
    u = rng.normal(4)
    u /= np.linalg.norm(u)
    mix = gmm_marginal(model, u)
    want = float(model.weights() @ (model.means @ u))
    assert np.sum(mix.weights * mix.means) == pytest.approx(want, abs=1e-12)


def test_marginal_mass_integrates_to_one():
    rng = Rng(10)
    model = Gmm(rng.normal(3), rng.normal((3, 2)) * 2, rng.normal((3, 2)) * 0.3)
    mix = gmm_marginal(model, np.array([0.6, 0.8]))
    sigma = np.sqrt(mix.vars.max())
    grid = np.linspace(mix.means.min() - 6 * sigma,
                       mix.means.max() + 6 * sigma, 2048)
    assert np.trapezoid(density_on_grid(mix, grid), grid) == pytest.approx(
        1.0, abs=1e-3)


def test_weight_std_values():
    assert weight_std(Gmm(np.zeros(5), np.zeros((5, 1)),
                          np.zeros((5, 1)))) == 0.0
    model = Gmm(np.log([0.7, 0.3]), np.zeros((2, 1)), np.zeros((2, 1)))
    assert weight_std(model) == pytest.approx(0.2, rel=1e-12)
    assert weight_std(Gmm([0.0], [[0.0]], [[0.0]])) == 0.0


def test_weight_std_bound_two_components():
    for logit in [0.0, 3.0, 30.0, 80.0]:
        model = Gmm(np.array([logit, 0.0]), np.zeros((2, 1)), np.zeros((2, 1)))
        assert 0.0 <= weight_std(model) <= 0.5


def test_json_round_trip():
    rng = Rng(31)
    model = Gmm(rng.normal(4), rng.normal((4, 3)) * 2, rng.normal((4, 3)))
    clone = Gmm.from_json(model.to_json())
    assert np.allclose(clone.weights(), model.weights(), rtol=1e-15, atol=0)
    assert np.array_equal(clone.means, model.means)
    assert np.allclose(clone.variances(), model.variances(), rtol=1e-15,
                       atol=0)
    data = Dataset(points=rng.normal((50, 3)) * 2)
    assert np.array_equal(assign(model, data).labels,
                          assign(clone, data).labels)


def test_dimension_mismatch_rejected():
    model = Gmm([0.0], [[0.0, 0.0]], [[0.0, 0.0]])
    with pytest.raises(ValueError):
        component_densities(model, np.zeros(3))
    with pytest.raises(ValueError):
        gmm_marginal(model, np.zeros(3))
