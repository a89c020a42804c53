"""Synthetic Gaussian data for tests and qualitative comparisons."""

import numpy as np

from .dataset import Dataset


def make_blobs(rng, counts, means, variances):
    """Sample diagonal-Gaussian clusters; labels record the generator
    component of each point."""
    counts = np.asarray(counts, dtype=int)
    means = np.asarray(means, dtype=float)
    variances = np.asarray(variances, dtype=float)
    if means.ndim != 2 or means.shape != variances.shape:
        raise ValueError("means and variances must both be K x d")
    if counts.shape != (means.shape[0],):
        raise ValueError("counts must have one entry per cluster")
    if np.any(counts < 1):
        raise ValueError("every cluster needs at least one sample")
    if np.any(variances <= 0.0):
        raise ValueError("variances must be positive")
    parts = []
    labels = []
    for j, m in enumerate(counts):
        noise = rng.normal((int(m), means.shape[1]))
        parts.append(means[j] + np.sqrt(variances[j]) * noise)
        labels.append(np.full(int(m), j))
    return Dataset(points=np.concatenate(parts), labels=np.concatenate(labels))


def sample_gmm(rng, model, n):
    """Ancestral sampling: component by mixture weight, then its Gaussian."""
    if n < 1:
        raise ValueError("need at least one sample")
    cum = np.cumsum(model.weights())
    comps = np.searchsorted(cum, rng.uniform(n), side="right")
    comps = np.minimum(comps, model.k - 1)
    noise = rng.normal((n, model.d))
    points = model.means[comps] + np.sqrt(model.variances()[comps]) * noise
    return Dataset(points=points, labels=comps)
