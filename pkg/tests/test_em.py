import numpy as np
import pytest

from dlcluster import (Dataset, EmConfig, Gmm, Rng, ari, assign, em_fit,
                       log_likelihood, make_blobs)


def test_single_component_closed_form():
    pts = Rng(0).normal((50, 3)) * 2 + np.array([1.0, -2.0, 0.5])
    result = em_fit(Dataset(points=pts), EmConfig(k=1, max_iters=1))
    model = result.model
    assert np.allclose(model.weights(), [1.0])
    assert np.allclose(model.means[0], pts.mean(axis=0), atol=1e-12)
    assert np.allclose(model.variances()[0], pts.var(axis=0), rtol=1e-9)


def test_log_likelihood_values():
    model = Gmm([0.0], [[0.0]], [[0.0]])
    single = Dataset(points=[[0.0]])
    assert log_likelihood(model, single) == pytest.approx(
        np.log(1 / np.sqrt(2 * np.pi)), rel=1e-12)
    pts = Rng(1).normal((20, 1))
    doubled = Dataset(points=np.vstack([pts, pts]))
    assert log_likelihood(model, doubled) == pytest.approx(
        2 * log_likelihood(model, Dataset(points=pts)), rel=1e-12)


def test_tiny_remote_component_bounded_effect():
    pts = Rng(2).normal((30, 1))
    base = Gmm([0.0], [[0.0]], [[0.0]])
    eps = 1e-6
    augmented = Gmm(np.log([1 - eps, eps]), [[0.0], [500.0]],
                    [[0.0], [0.0]])
    delta = abs(log_likelihood(augmented, Dataset(points=pts))
                - log_likelihood(base, Dataset(points=pts)))
    # Each per-point term moves by at most |ln(1-eps)| < eps + eps^2.
    assert delta < (eps + eps ** 2) * len(pts)


def test_blob_recovery():
    means = np.array([[5.0, 5.0], [5.0, -5.0], [-5.0, 5.0], [-5.0, -5.0]])
    data = make_blobs(Rng(7), [120] * 4, means, np.ones((4, 2)))
    result = em_fit(data, EmConfig(k=4, seed=7))
    labels = assign(result.model, data).labels
    assert ari(data.labels, labels) >= 0.95


def test_monotone_log_likelihood():
    for seed in range(3):
        pts = Rng(seed).normal((80, 2)) * 2
        result = em_fit(Dataset(points=pts), EmConfig(k=3, seed=seed,
                                                      max_iters=60))
        hist = result.log_likelihood_history
        for i in range(len(hist) - 1):
            if i not in result.adjusted_iterations:
                assert hist[i + 1] >= hist[i] - 1e-9


def test_rejects_k_above_n():
    with pytest.raises(ValueError):
        em_fit(Dataset(points=[[0.0], [1.0]]), EmConfig(k=3))
