"""Kernel-density target: an equal-weighted Gaussian mixture with one
component per data point and a shared diagonal bandwidth."""

from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from .dataset import Dataset
from .marginal import LOG_2PI, Mixture1D

BANDWIDTH_FLOOR = 1e-6


def estimate_bandwidth(data):
    """Scott's rule per coordinate: H_jj = (sigma_j * N^(-1/(d+4)))^2.

    Degenerate (constant) coordinates get a small positive floor so the
    bandwidth stays positive-definite.
    """
    if data.n < 2:
        raise ValueError("bandwidth estimation needs at least 2 samples")
    sigma = np.std(data.points, axis=0, ddof=1)
    h = (sigma * data.n ** (-1.0 / (data.d + 4))) ** 2
    # Constant coordinates: std is float noise, not signal.
    scale = np.maximum(np.abs(data.points).max(axis=0), 1.0)
    degenerate = sigma <= 1e-12 * scale
    return np.where(degenerate, BANDWIDTH_FLOOR, h)


@dataclass
class KdeTarget:
    """Immutable target distribution q(x); read-only after construction."""

    data: Dataset
    bandwidth_diag: np.ndarray

    def __post_init__(self):
        h = np.asarray(self.bandwidth_diag, dtype=float)
        if h.shape != (self.data.d,):
            raise ValueError(
                f"bandwidth must have {self.data.d} entries, got shape {h.shape}"
            )
        if np.any(h <= 0.0):
            raise ValueError("bandwidth entries must be positive")
        self.bandwidth_diag = h

    @classmethod
    def from_data(cls, data):
        return cls(data=data, bandwidth_diag=estimate_bandwidth(data))

    @property
    def d(self):
        return self.data.d


def kde_density(target, x):
    """q(x) = (1/N) sum_i N(x; x_i, H), evaluated via log-sum-exp."""
    x = np.asarray(x, dtype=float)
    if x.shape != (target.d,):
        raise ValueError(f"point must have dimension {target.d}, got {x.shape}")
    if not np.all(np.isfinite(x)):
        raise ValueError("point contains non-finite values")
    h = target.bandwidth_diag
    z = x - target.data.points
    logs = -0.5 * np.sum(z * z / h + np.log(h) + LOG_2PI, axis=1)
    return float(np.exp(logsumexp(logs) - np.log(target.data.n)))


def kde_marginal(target, u):
    """Projection of q onto direction u: N equal-weighted components with
    means u.x_i and the common variance u'Hu."""
    u = np.asarray(u, dtype=float)
    if u.shape != (target.d,):
        raise ValueError(f"direction must have dimension {target.d}, got {u.shape}")
    n = target.data.n
    var = float(np.sum(u * u * target.bandwidth_diag))
    return Mixture1D(
        weights=np.full(n, 1.0 / n),
        means=target.data.points @ u,
        vars=np.full(n, var),
    )
