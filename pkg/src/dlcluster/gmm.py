"""The learnable K-component diagonal-covariance Gaussian mixture.

Parameters are stored unconstrained: weights as free logits (softmax),
variances as log-variances (exp, clamped), so gradient steps can never
leave the feasible set.
"""

import json
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from .marginal import LOG_2PI, Mixture1D

LOG_VAR_CLAMP = 20.0


@dataclass
class Gmm:
    weight_logits: np.ndarray  # (K,)
    means: np.ndarray          # (K, d)
    log_vars: np.ndarray       # (K, d)

    def __post_init__(self):
        self.weight_logits = np.asarray(self.weight_logits, dtype=float)
        self.means = np.asarray(self.means, dtype=float)
        self.log_vars = np.asarray(self.log_vars, dtype=float)
        k = self.weight_logits.shape[0]
        if self.means.ndim != 2 or self.means.shape[0] != k:
            raise ValueError("means must be a K x d matrix")
        if self.log_vars.shape != self.means.shape:
            raise ValueError("log_vars must match the shape of means")

    @property
    def k(self):
        return self.weight_logits.shape[0]

    @property
    def d(self):
        return self.means.shape[1]

    def weights(self):
        z = self.weight_logits - self.weight_logits.max()
        e = np.exp(z)
        return e / e.sum()

    def variances(self):
        return np.exp(np.clip(self.log_vars, -LOG_VAR_CLAMP, LOG_VAR_CLAMP))

    def to_json(self):
        return json.dumps({
            "k": self.k,
            "d": self.d,
            "weights": self.weights().tolist(),
            "means": self.means.tolist(),
            "variances": self.variances().tolist(),
        })

    @classmethod
    def from_json(cls, text):
        doc = json.loads(text)
        w = np.asarray(doc["weights"], dtype=float)
        v = np.asarray(doc["variances"], dtype=float)
        model = cls(
            weight_logits=np.log(w),
            means=np.asarray(doc["means"], dtype=float),
            log_vars=np.log(v),
        )
        if model.k != doc["k"] or model.d != doc["d"]:
            raise ValueError("model JSON dimensions do not match its arrays")
        return model


@dataclass
class Assignment:
    labels: np.ndarray
    responsibilities: np.ndarray | None = None


def component_log_densities(model, x):
    """Per-component log N(x; mu_k, diag Sigma_k); x is (d,) or (N, d)."""
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != model.d:
        raise ValueError(f"point dimension {x.shape[-1]} != model dimension {model.d}")
    v = model.variances()
    z = x[..., None, :] - model.means
    return -0.5 * np.sum(z * z / v + np.log(v) + LOG_2PI, axis=-1)


def component_densities(model, x):
    return np.exp(component_log_densities(model, x))


def posterior(model, x):
    """Responsibilities gamma_k proportional to w_k N(x; Theta_k)."""
    logs = component_log_densities(model, x) + np.log(model.weights())
    if np.all(np.isinf(logs)) and np.all(logs < 0):
        warnings.warn("all component log-densities are -inf; uniform fallback")
        return np.full(model.k, 1.0 / model.k)
    return np.exp(logs - logsumexp(logs, axis=-1, keepdims=True))


def assign(model, data, mode="posterior"):
    """Hard cluster labels by argmax posterior (exact rule) or argmax
    component density (the equal-weight approximation). Ties go to the
    lowest component index."""
    if data.n < 1:
        raise ValueError("cannot assign an empty dataset")
    if mode not in ("posterior", "density"):
        raise ValueError(f"unknown assignment mode {mode!r}")
    logs = component_log_densities(model, data.points)
    if mode == "posterior":
        logs = logs + np.log(model.weights())
        resp = np.exp(logs - logsumexp(logs, axis=1, keepdims=True))
        return Assignment(labels=np.argmax(logs, axis=1), responsibilities=resp)
    return Assignment(labels=np.argmax(logs, axis=1))


def gmm_marginal(model, u):
    """Projection onto direction u: means u.mu_k, variances sum_j u_j^2 v_kj."""
    u = np.asarray(u, dtype=float)
    if u.shape != (model.d,):
        raise ValueError(f"direction must have dimension {model.d}, got {u.shape}")
    return Mixture1D(
        weights=model.weights(),
        means=model.means @ u,
        vars=model.variances() @ (u * u),
    )


def weight_std(model):
    """Population standard deviation of the mixture weights."""
    w = model.weights()
    return float(np.sqrt(np.mean((w - w.mean()) ** 2)))
