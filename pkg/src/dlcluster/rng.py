"""Seeded randomness, unit vectors on the hypersphere, and grid helpers."""

import os

import numpy as np

_MASK64 = (1 << 64) - 1


def _splitmix64(x):
    # Finalizer from splitmix64; used to derive independent child seeds.
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


class Rng:
    """Deterministic random stream with an explicit 64-bit seed.

    Single-owner: not safe to share between concurrent tasks. Use
    :meth:`child` to derive independent streams for parallel work.
    """

    def __init__(self, seed):
        self.seed = int(seed) & _MASK64
        self._gen = np.random.Generator(np.random.PCG64(self.seed))

    def normal(self, size=None):
        return self._gen.standard_normal(size)

    def uniform(self, size=None):
        return self._gen.random(size)

    def integers(self, low, high=None, size=None):
        return self._gen.integers(low, high, size=size)

    def choice(self, n, size, replace=True):
        return self._gen.choice(n, size=size, replace=replace)

    def child(self, index):
        """Independent stream derived by hashing (seed, index)."""
        return Rng(_splitmix64(self.seed ^ _splitmix64(int(index) & _MASK64)))


def sample_unit_vector(rng, d):
    """Draw a vector uniformly distributed on the (d-1)-sphere.

    Built from d independent standard normals, normalized; resampled in
    the (practically unreachable) case of a near-zero norm.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    while True:
        v = rng.normal(d)
        norm = np.linalg.norm(v)
        if norm >= 1e-12:
            return v / norm


def linear_grid(lo, hi, g):
    """g equally spaced points from lo to hi inclusive."""
    if not lo < hi:
        raise ValueError(f"grid needs lo < hi, got [{lo}, {hi}]")
    if g < 2:
        raise ValueError(f"grid needs at least 2 points, got {g}")
    return np.linspace(lo, hi, g)


def worker_count():
    """Parallelism cap: DLCLUSTER_THREADS if set, else hardware concurrency."""
    env = os.environ.get("DLCLUSTER_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1
