"""k-means++ seeded Lloyd's algorithm."""

from dataclasses import dataclass, field

import numpy as np
from scipy.spatial.distance import cdist


@dataclass
class KmeansResult:
    centers: np.ndarray
    labels: np.ndarray
    inertia: float
    inertia_history: list = field(default_factory=list)


def _pp_seed(points, k, rng):
    """k-means++ seeding: first center uniform, then D^2 sampling."""
    n = points.shape[0]
    centers = np.empty((k, points.shape[1]))
    centers[0] = points[int(rng.integers(n))]
    d2 = cdist(points, centers[:1], "sqeuclidean")[:, 0]
    for j in range(1, k):
        total = d2.sum()
        if total <= 0.0:
            centers[j] = points[int(rng.integers(n))]
        else:
            cum = np.cumsum(d2 / total)
            centers[j] = points[np.searchsorted(cum, rng.uniform())]
        d2 = np.minimum(d2, cdist(points, centers[j:j + 1], "sqeuclidean")[:, 0])
    return centers


def _lloyd(points, centers, max_iters, tol):
    history = []
    labels = None
    for _ in range(max_iters):
        d2 = cdist(points, centers, "sqeuclidean")
        labels = np.argmin(d2, axis=1)
        history.append(float(d2[np.arange(len(labels)), labels].sum()))
        new_centers = centers.copy()
        for j in range(centers.shape[0]):
            mask = labels == j
            if mask.any():
                new_centers[j] = points[mask].mean(axis=0)
            else:
                # Reseed empty clusters at the point farthest from its center.
                far = np.argmax(d2[np.arange(len(labels)), labels])
                new_centers[j] = points[far]
        move = np.max(np.linalg.norm(new_centers - centers, axis=1))
        centers = new_centers
        if move <= tol:
            break
    d2 = cdist(points, centers, "sqeuclidean")
    labels = np.argmin(d2, axis=1)
    inertia = float(d2[np.arange(len(labels)), labels].sum())
    history.append(inertia)
    return centers, labels, inertia, history


def kmeans_fit(data, k, rng, max_iters=300, tol=1e-6, restarts=1):
    """Fit k centers; best of `restarts` independent k-means++ starts."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if k > data.n:
        raise ValueError(f"k={k} exceeds the number of samples N={data.n}")
    best = None
    for _ in range(max(1, restarts)):
        centers = _pp_seed(data.points, k, rng)
        centers, labels, inertia, history = _lloyd(data.points, centers,
                                                   max_iters, tol)
        if best is None or inertia < best.inertia:
            best = KmeansResult(centers=centers, labels=labels,
                                inertia=inertia, inertia_history=history)
    return best
