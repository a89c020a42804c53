"""dlcluster: distribution-learning clustering.

Fits Gaussian mixtures by minimizing the KL divergence between random
1-D marginals of a kernel-density target and of the model (with k-means
initialization and a weight-balance penalty), alongside EM and k-means
baselines and the usual clustering metrics.
"""

from .dataset import Dataset
from .em import EmConfig, em_fit, log_likelihood
from .gmm import (Assignment, Gmm, assign, component_densities, gmm_marginal,
                  posterior, weight_std)
from .kde import KdeTarget, estimate_bandwidth, kde_density, kde_marginal
from .kmeans import KmeansResult, kmeans_fit
from .marginal import (DiscretizedPdf, Mixture1D, discretize, kl_discrete,
                       pdf, shared_grid)
from .mcmarg import Adam, TrainConfig, TrainReport, fit, loss, loss_gradients
from .metrics import acc, ari, hungarian, nmi
from .rng import Rng, linear_grid, sample_unit_vector
from .synth import make_blobs, sample_gmm

__version__ = "0.1.0"

__all__ = [
    "Adam", "Assignment", "Dataset", "DiscretizedPdf", "EmConfig", "Gmm",
    "KdeTarget", "KmeansResult", "Mixture1D", "Rng", "TrainConfig",
    "TrainReport", "acc", "ari", "assign", "component_densities",
    "discretize", "em_fit", "estimate_bandwidth", "fit", "gmm_marginal",
    "hungarian", "kde_density", "kde_marginal", "kl_discrete", "kmeans_fit",
    "linear_grid", "log_likelihood", "loss", "loss_gradients", "make_blobs",
    "nmi", "pdf", "posterior", "sample_gmm", "sample_unit_vector",
    "shared_grid", "weight_std",
]
