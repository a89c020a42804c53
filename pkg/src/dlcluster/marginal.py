"""One-dimensional Gaussian mixtures, grid discretization, and discrete KL."""

from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from .rng import linear_grid

LOG_2PI = float(np.log(2.0 * np.pi))

# Floors: MASS_FLOOR keeps discretized bins strictly positive before
# normalization; KL_FLOOR keeps the log argument finite where model mass
# vanishes under target mass, while staying far below any bin mass that
# matters, so discrete KL tracks the closed form even for well-separated
# mixtures.
MASS_FLOOR = 1e-300
KL_FLOOR = 1e-300


@dataclass
class Mixture1D:
    """Weighted 1-D Gaussian mixture; the marginal of a d-dim mixture."""

    weights: np.ndarray
    means: np.ndarray
    vars: np.ndarray

    def __post_init__(self):
        self.weights = np.asarray(self.weights, dtype=float)
        self.means = np.asarray(self.means, dtype=float)
        self.vars = np.asarray(self.vars, dtype=float)
        m = self.weights.shape[0]
        if self.means.shape != (m,) or self.vars.shape != (m,):
            raise ValueError("weights, means and vars must have equal length")
        if abs(self.weights.sum() - 1.0) > 1e-9:
            raise ValueError(f"weights sum to {self.weights.sum()}, expected 1")
        if np.any(self.vars <= 0.0):
            raise ValueError("all component variances must be positive")


@dataclass
class DiscretizedPdf:
    """Probability masses on an equally spaced grid, summing to one."""

    grid: np.ndarray
    mass: np.ndarray


def pdf(mix, t):
    """Mixture density at t (scalar or array), accumulated in log space."""
    t = np.asarray(t, dtype=float)
    z = t[..., None] - mix.means
    logs = (
        np.log(mix.weights)
        - 0.5 * (z * z / mix.vars + np.log(mix.vars) + LOG_2PI)
    )
    return np.exp(logsumexp(logs, axis=-1))


def density_on_grid(mix, grid):
    """Vectorized mixture density at every grid point (direct space).

    1-D Gaussian terms cannot overflow and underflow only in tails that
    are floored downstream, so no log-space pass is needed here.
    """
    grid = np.asarray(grid, dtype=float)
    norm = mix.weights / np.sqrt(2.0 * np.pi * mix.vars)
    z = grid[:, None] - mix.means
    return np.exp(-0.5 * z * z / mix.vars) @ norm


def shared_grid(q, p, g=1024, pad_sigmas=6.0):
    """Common evaluation grid covering both mixtures' component means
    padded by pad_sigmas times the largest component std of either."""
    if g < 2:
        raise ValueError(f"grid needs at least 2 points, got {g}")
    means = np.concatenate([q.means, p.means])
    sigma_max = np.sqrt(max(q.vars.max(), p.vars.max()))
    return linear_grid(means.min() - pad_sigmas * sigma_max,
                       means.max() + pad_sigmas * sigma_max, g)


def discretize(mix, grid):
    vals = np.maximum(density_on_grid(mix, grid), MASS_FLOOR)
    return DiscretizedPdf(grid=np.asarray(grid, dtype=float),
                          mass=vals / vals.sum())


def kl_discrete(q, p):
    """Discrete KL divergence of target q from model p on a shared grid."""
    if q.grid.shape != p.grid.shape or not np.array_equal(q.grid, p.grid):
        raise ValueError("discretized pdfs must share the same grid")
    return float(np.sum(q.mass * np.log(q.mass / np.maximum(p.mass, KL_FLOOR))))
