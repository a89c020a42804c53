"""The N x d sample matrix with optional ground-truth labels."""

from dataclasses import dataclass

import numpy as np


@dataclass
class Dataset:
    """Rows are samples. Labels, when present, are evaluation-only."""

    points: np.ndarray
    labels: np.ndarray | None = None

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2:
            raise ValueError(f"points must be an N x d matrix, got shape {pts.shape}")
        if pts.shape[0] < 1 or pts.shape[1] < 1:
            raise ValueError(f"need N >= 1 and d >= 1, got shape {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise ValueError("points contain non-finite values")
        self.points = pts
        if self.labels is not None:
            lab = np.asarray(self.labels, dtype=int)
            if lab.shape != (pts.shape[0],):
                raise ValueError(
                    f"labels must have length {pts.shape[0]}, got shape {lab.shape}"
                )
            if np.any(lab < 0):
                raise ValueError("labels must be non-negative")
            self.labels = lab

    @property
    def n(self):
        return self.points.shape[0]

    @property
    def d(self):
        return self.points.shape[1]
