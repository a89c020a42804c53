"""Classical EM for diagonal-covariance GMMs, as a baseline trainer
interchangeable with the marginalized-KL optimizer."""

from dataclasses import dataclass, field

import numpy as np
from scipy.special import logsumexp

from .gmm import Gmm, component_log_densities
from .kmeans import kmeans_fit
from .rng import Rng


@dataclass
class EmConfig:
    k: int
    max_iters: int = 200
    tol: float = 1e-6
    var_floor: float = 1e-6
    init: str = "kmeans"
    seed: int = 0

    def validate(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        if self.var_floor <= 0.0:
            raise ValueError("var_floor must be positive")
        if self.tol < 0.0:
            raise ValueError("tol must be non-negative")
        if self.init not in ("kmeans", "random"):
            raise ValueError(f"unknown init {self.init!r}")


@dataclass
class EmResult:
    model: Gmm
    log_likelihood_history: list
    # Iterations where a variance floor or empty-component reseed fired;
    # monotonicity of the likelihood is only guaranteed elsewhere.
    adjusted_iterations: list = field(default_factory=list)


def log_likelihood(model, data):
    logs = component_log_densities(model, data.points) + np.log(model.weights())
    return float(logsumexp(logs, axis=1).sum())


def em_fit(data, config):
    """E-step responsibilities, M-step weighted moments, until the mean
    log-likelihood improvement drops below tol."""
    config.validate()
    if config.k > data.n:
        raise ValueError(f"k={config.k} exceeds the number of samples N={data.n}")
    rng = Rng(config.seed)
    x = data.points
    n, d = x.shape
    k = config.k

    if config.init == "kmeans":
        means = kmeans_fit(data, k, rng.child(1)).centers
    else:
        means = x[rng.choice(n, k, replace=False)].copy()
    weights = np.full(k, 1.0 / k)
    variances = np.tile(np.maximum(np.var(x, axis=0), config.var_floor), (k, 1))

    history = []
    adjusted = []
    prev_mean_ll = -np.inf
    for it in range(config.max_iters):
        model = Gmm(weight_logits=np.log(weights), means=means,
                    log_vars=np.log(variances))
        logs = component_log_densities(model, x) + np.log(weights)
        per_point = logsumexp(logs, axis=1)
        resp = np.exp(logs - per_point[:, None])
        ll = float(per_point.sum())
        history.append(ll)

        touched = False
        nk = resp.sum(axis=0)
        for j in np.where(nk < 1e-10)[0]:
            # Revive dead components at the worst-explained point.
            worst = int(np.argmin(per_point))
            resp[:, j] = 0.0
            resp[worst, :] = 0.0
            resp[worst, j] = 1.0
            touched = True
        if touched:
            nk = resp.sum(axis=0)

        weights = nk / n
        means = (resp.T @ x) / nk[:, None]
        sq = resp.T @ (x * x) / nk[:, None] - means ** 2
        if np.any(sq < config.var_floor):
            touched = True
        variances = np.maximum(sq, config.var_floor)
        if touched:
            adjusted.append(it)

        if ll / n - prev_mean_ll < config.tol and it > 0:
            break
        prev_mean_ll = ll / n

    model = Gmm(weight_logits=np.log(weights), means=means,
                log_vars=np.log(variances))
    return EmResult(model=model, log_likelihood_history=history,
                    adjusted_iterations=adjusted)
