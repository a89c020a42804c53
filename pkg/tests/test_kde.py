import numpy as np
import pytest

from dlcluster import (Dataset, KdeTarget, Rng, estimate_bandwidth,
                       kde_density, kde_marginal, sample_unit_vector)
from oracles import kde_density_naive


def _unit_std_data(n=100, d=2):
    # Sample standard deviation exactly 1 per coordinate by construction.
    col = np.concatenate([np.full(n // 2, -1.0), np.full(n // 2, 1.0)])
    col = col * np.sqrt((n - 1) / n)
    return Dataset(points=np.tile(col[:, None], (1, d)))


def test_scott_rule_value():
    h = estimate_bandwidth(_unit_std_data(100, 2))
    # (sigma * N^(-1/(d+4)))^2 with sigma=1, N=100, d=2.
    assert np.allclose(h, 100 ** (-1.0 / 3.0), atol=1e-12)


def test_bandwidth_scales_quadratically():
    pts = Rng(1).normal((50, 3))
    scale = np.array([0.5, 2.0, 7.0])
    h1 = estimate_bandwidth(Dataset(points=pts))
    h2 = estimate_bandwidth(Dataset(points=pts * scale))
    assert np.allclose(h2, h1 * scale ** 2, rtol=1e-9)


def test_bandwidth_floor_for_constant_coordinate():
    pts = np.column_stack([Rng(2).normal(30), np.full(30, 4.2)])
    h = estimate_bandwidth(Dataset(points=pts))
    assert h[1] == 1e-6


def test_bandwidth_needs_two_samples():
    with pytest.raises(ValueError):
        estimate_bandwidth(Dataset(points=[[1.0, 2.0]]))


def test_density_single_point_peak():
    target = KdeTarget(data=Dataset(points=[[0.0, 0.0]]),
                       bandwidth_diag=np.array([1.0, 1.0]))
    assert kde_density(target, np.zeros(2)) == pytest.approx(1 / (2 * np.pi),
                                                             rel=1e-12)


def test_density_two_points_midpoint():
    target = KdeTarget(data=Dataset(points=[[0.0], [2.0]]),
                       bandwidth_diag=np.array([1.0]))
    expected = np.exp(-0.5) / np.sqrt(2 * np.pi)
    assert kde_density(target, np.array([1.0])) == pytest.approx(expected,
                                                                 rel=1e-12)


def test_density_positive_and_matches_naive():
    rng = Rng(9)
    for d in [1, 3]:
        pts = rng.normal((40, d)) * 3
        target = KdeTarget.from_data(Dataset(points=pts))
        for _ in range(5):
            x = rng.normal(d) * 3
            got = kde_density(target, x)
            want = kde_density_naive(pts, target.bandwidth_diag, x)
            assert got > 0
            assert got == pytest.approx(want, rel=1e-12)


def test_density_dimension_mismatch():
    target = KdeTarget(data=Dataset(points=[[0.0, 0.0]]),
                       bandwidth_diag=np.array([1.0, 1.0]))
    with pytest.raises(ValueError):
        kde_density(target, np.zeros(3))


def test_marginal_axis_projection():
    target = KdeTarget(data=Dataset(points=[[0.0, 0.0], [2.0, 0.0]]),
                       bandwidth_diag=np.array([1.0, 4.0]))
    mix = kde_marginal(target, np.array([1.0, 0.0]))
    assert np.allclose(sorted(mix.means), [0.0, 2.0])
    assert np.allclose(mix.vars, 1.0)
    assert np.allclose(mix.weights, 0.5)


def test_marginal_quadratic_form_variance():
    target = KdeTarget(data=Dataset(points=[[0.0, 0.0], [2.0, 0.0]]),
                       bandwidth_diag=np.array([1.0, 4.0]))
    mix = kde_marginal(target, np.array([0.6, 0.8]))
    assert np.allclose(mix.vars, 0.36 * 1.0 + 0.64 * 4.0)


def test_marginal_mean_is_projected_centroid():
    rng = Rng(4)
    pts = rng.normal((25, 3))
    target = KdeTarget.from_data(Dataset(points=pts))
    u = sample_unit_vector(rng, 3)
    mix = kde_marginal(target, u)
    assert np.sum(mix.weights * mix.means) == pytest.approx(
        float(pts.mean(axis=0) @ u), abs=1e-12)


def test_marginal_mass_integrates_to_one():
    rng = Rng(6)
    pts = rng.normal((30, 2)) * 2
    target = KdeTarget.from_data(Dataset(points=pts))
    u = sample_unit_vector(rng, 2)
    mix = kde_marginal(target, u)
    sigma = np.sqrt(mix.vars.max())
    grid = np.linspace(mix.means.min() - 6 * sigma,
                       mix.means.max() + 6 * sigma, 2048)
    from dlcluster.marginal import density_on_grid
    mass = np.trapezoid(density_on_grid(mix, grid), grid)
    assert mass == pytest.approx(1.0, abs=1e-3)
