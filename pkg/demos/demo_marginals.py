"""Project a kernel-density target and a mixture model onto random
directions and measure the discrete KL divergence of each marginal pair.

Shows the quantity the trainer minimizes: a mismatched model has large
marginal KL against the target; a fitted model has small marginal KL.

Run:  python demos/demo_marginals.py
"""

import numpy as np

import dlcluster as dl
from dlcluster.gmm import Gmm


def mean_marginal_kl(model, target, rng, n_dirs=16):
    vals = []
    for _ in range(n_dirs):
        u = dl.sample_unit_vector(rng, target.d)
        q = dl.kde_marginal(target, u)
        p = dl.gmm_marginal(model, u)
        grid = dl.shared_grid(q, p)
        vals.append(dl.kl_discrete(dl.discretize(q, grid),
                                   dl.discretize(p, grid)))
    return float(np.mean(vals))


def main():
    data = dl.make_blobs(dl.Rng(0), [200, 200],
                         np.array([[0.0, 0.0], [6.0, 2.0]]), np.ones((2, 2)))
    target = dl.KdeTarget.from_data(data)
    print(f"KDE target: {data.n} components,"
          f" bandwidth diag = {target.bandwidth_diag}")

    # Both components piled on one mode, far too narrow.
    mismatched = Gmm([0.0, 0.0], [[0.0, 0.0], [0.5, 0.5]],
                     np.log([[0.1, 0.1], [0.1, 0.1]]))
    fitted = dl.fit(data, dl.TrainConfig(k=2, iters=100, seed=0)).final_model

    for name, model in (("mismatched", mismatched), ("fitted", fitted)):
        print(f"mean marginal KL over 16 directions, {name:10s} model:"
              f" {mean_marginal_kl(model, target, dl.Rng(42)):.4f}")


if __name__ == "__main__":
    main()
