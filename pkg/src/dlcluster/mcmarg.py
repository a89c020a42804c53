"""MCMarg-C: fit GMM parameters by minimizing the KL divergence between
random 1-D marginals of the KDE target and of the model, plus a penalty
on the standard deviation of the mixture weights.

Gradients are analytic (chain rule through softmax, projection, Gaussian
pdf, discretization normalization and the floored log); the grid of each
projection is treated as a constant of that evaluation.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .gmm import Gmm, gmm_marginal, weight_std
from .kde import KdeTarget, kde_marginal
from .kmeans import kmeans_fit
from .marginal import KL_FLOOR, MASS_FLOOR, discretize, shared_grid
from .rng import Rng, sample_unit_vector, worker_count


@dataclass
class TrainConfig:
    k: int
    iters: int = 2000
    lr: float = 1e-4
    unit_vectors_per_step: int = 32
    wsd_weight: float = 1.0
    grid_size: int = 1024
    init: str = "kmeans"
    seed: int = 0
    plateau_patience: int = 200
    plateau_tol: float = 1e-6

    def validate(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        if self.iters < 1:
            raise ValueError("iters must be at least 1")
        if self.lr <= 0.0:
            raise ValueError("learning rate must be positive")
        if self.unit_vectors_per_step < 1:
            raise ValueError("need at least one unit vector per step")
        if self.wsd_weight < 0.0:
            raise ValueError("wsd_weight must be non-negative")
        if self.init not in ("kmeans", "random"):
            raise ValueError(f"unknown init {self.init!r}")


@dataclass
class TrainRecord:
    iteration: int
    kl_term: float
    wsd_term: float
    total: float


@dataclass
class TrainReport:
    history: list
    final_model: Gmm
    iterations_run: int
    stop_reason: str


class Adam:
    """Standard Adam with bias correction over a list of arrays."""

    def __init__(self, lr, beta1=0.9, beta2=0.999, eps=1e-8):
        self.lr = lr
        self.beta1 = beta1
        self.beta2 = beta2
        self.eps = eps
        self.t = 0
        self.m = None
        self.v = None

    def step(self, params, grads):
        for g in grads:
            if not np.all(np.isfinite(g)):
                raise ValueError("non-finite gradient passed to Adam")
        if self.m is None:
            self.m = [np.zeros_like(p) for p in params]
            self.v = [np.zeros_like(p) for p in params]
        self.t += 1
        out = []
        for i, (p, g) in enumerate(zip(params, grads)):
            self.m[i] = self.beta1 * self.m[i] + (1 - self.beta1) * g
            self.v[i] = self.beta2 * self.v[i] + (1 - self.beta2) * g * g
            m_hat = self.m[i] / (1 - self.beta1 ** self.t)
            v_hat = self.v[i] / (1 - self.beta2 ** self.t)
            out.append(p - self.lr * m_hat / (np.sqrt(v_hat) + self.eps))
        return out


def _projection_grids(model, target, us, g):
    return [shared_grid(kde_marginal(target, u), gmm_marginal(model, u), g)
            for u in us]


def _kl_and_grads_one(model, target, u, grid, want_grads):
    """KL of one projection and, optionally, its gradient contributions
    w.r.t. (weights, means, log_vars). The grid is held constant."""
    q_mass = discretize(kde_marginal(target, u), grid).mass

    w = model.weights()
    v = model.variances()
    nu = model.means @ u
    tau = v @ (u * u)
    z = grid[:, None] - nu
    phi = np.exp(-0.5 * z * z / tau) / np.sqrt(2.0 * np.pi * tau)
    p_raw = phi @ w
    p_fl = np.maximum(p_raw, MASS_FLOOR)
    s = p_fl.sum()
    p_mass = p_fl / s
    kl = float(np.sum(q_mass * np.log(q_mass / np.maximum(p_mass, KL_FLOOR))))
    if not want_grads:
        return kl, None

    r = np.where(p_mass > KL_FLOOR, -q_mass / p_mass, 0.0)
    c = np.where(p_raw > MASS_FLOOR, (r - r @ p_mass) / s, 0.0)
    cphi = phi * c[:, None]
    d_w = cphi.sum(axis=0)
    d_nu = w * np.sum(cphi * z / tau, axis=0)
    d_tau = w * np.sum(cphi * (z * z - tau) / (2.0 * tau * tau), axis=0)
    d_means = d_nu[:, None] * u
    clamp = (np.abs(model.log_vars) < 20.0).astype(float)
    d_log_vars = d_tau[:, None] * (u * u) * v * clamp
    return kl, (d_w, d_means, d_log_vars)


def _wsd_and_grad(model):
    w = model.weights()
    wsd = float(np.sqrt(np.mean((w - w.mean()) ** 2)))
    if wsd == 0.0:
        return wsd, np.zeros_like(w)
    return wsd, (w - w.mean()) / (len(w) * wsd)


def _softmax_chain(model, d_w):
    w = model.weights()
    return w * (d_w - w @ d_w)


def loss_with_grids(model, target, us, grids, c):
    """(total, kl_term, wsd_term) on explicitly supplied per-projection grids."""
    kls = [_kl_and_grads_one(model, target, u, grid, False)[0]
           for u, grid in zip(us, grids)]
    kl_term = float(np.mean(kls))
    wsd_term = weight_std(model)
    return kl_term + c * wsd_term, kl_term, wsd_term


def loss(model, target, us, c, grid_size=1024):
    """Combined objective: mean projected KL plus c times the weight-std
    penalty, on grids derived from the current model and target."""
    _check_dims(model, target, us)
    grids = _projection_grids(model, target, us, grid_size)
    return loss_with_grids(model, target, us, grids, c)


def loss_gradients(model, target, us, c, grid_size=1024, grids=None,
                   executor=None):
    """Loss terms and analytic gradients w.r.t. (weight_logits, means,
    log_vars), averaged over the supplied unit vectors."""
    _check_dims(model, target, us)
    if grids is None:
        grids = _projection_grids(model, target, us, grid_size)

    if executor is None:
        parts = [_kl_and_grads_one(model, target, u, grid, True)
                 for u, grid in zip(us, grids)]
    else:
        parts = list(executor.map(
            lambda ug: _kl_and_grads_one(model, target, ug[0], ug[1], True),
            zip(us, grids)))
    kl_term = float(np.mean([p[0] for p in parts]))
    n_u = len(parts)
    d_w = sum(p[1][0] for p in parts) / n_u
    g_means = sum(p[1][1] for p in parts) / n_u
    g_log_vars = sum(p[1][2] for p in parts) / n_u

    wsd_term, d_wsd = _wsd_and_grad(model)
    g_logits = _softmax_chain(model, d_w + c * d_wsd)
    total = kl_term + c * wsd_term
    return (total, kl_term, wsd_term), (g_logits, g_means, g_log_vars)


def _check_dims(model, target, us):
    if model.d != target.d:
        raise ValueError(f"model dimension {model.d} != data dimension {target.d}")
    for u in us:
        if np.asarray(u).shape != (model.d,):
            raise ValueError("unit vector dimension does not match the model")


def init_model(data, config, rng):
    """Uniform weights, k-means (or random-point) means, and per-coordinate
    data variance shrunk by k^2 as the starting spread."""
    if config.init == "kmeans":
        means = kmeans_fit(data, config.k, rng.child(1)).centers
    else:
        idx = rng.choice(data.n, config.k, replace=False)
        means = data.points[idx].copy()
    var0 = np.maximum(np.var(data.points, axis=0), 1e-12) / config.k ** 2
    return Gmm(
        weight_logits=np.zeros(config.k),
        means=means,
        log_vars=np.tile(np.log(var0), (config.k, 1)),
    )


def fit(data, config):
    """Run MCMarg-C on a dataset; deterministic given config.seed."""
    config.validate()
    if config.k > data.n:
        raise ValueError(f"k={config.k} exceeds the number of samples N={data.n}")
    rng = Rng(config.seed)
    target = KdeTarget.from_data(data)
    model = init_model(data, config, rng)
    adam = Adam(config.lr)

    history = []
    best = np.inf
    stale = 0
    stop_reason = "max_iters"
    workers = min(worker_count(), config.unit_vectors_per_step)
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for it in range(config.iters):
            us = [sample_unit_vector(rng, data.d)
                  for _ in range(config.unit_vectors_per_step)]
            (total, kl, wsd), grads = loss_gradients(
                model, target, us, config.wsd_weight, config.grid_size,
                executor=pool)
            if not np.isfinite(total):
                raise RuntimeError(
                    f"non-finite loss at iteration {it}: kl={kl}, wsd={wsd}")
            history.append(TrainRecord(iteration=it, kl_term=kl,
                                       wsd_term=wsd, total=total))
            params = adam.step(
                [model.weight_logits, model.means, model.log_vars], grads)
            model = Gmm(weight_logits=params[0], means=params[1],
                        log_vars=params[2])
            if best - total > config.plateau_tol:
                best = total
                stale = 0
            else:
                stale += 1
                if stale >= config.plateau_patience:
                    stop_reason = "plateau"
                    break
    finally:
        if pool is not None:
            pool.shutdown()
    return TrainReport(history=history, final_model=model,
                       iterations_run=len(history), stop_reason=stop_reason)
