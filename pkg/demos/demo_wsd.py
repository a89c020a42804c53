"""Effect of the weight-balance penalty on an imbalanced 1-D mixture.

The penalty c * std(weights) pushes component weights toward uniform:
the fitted weight spread shrinks monotonically as c grows.

Run:  python demos/demo_wsd.py
"""

import numpy as np

import dlcluster as dl


def main():
    data = dl.make_blobs(dl.Rng(7), [900, 100],
                         np.array([[0.0], [6.0]]), np.ones((2, 1)))
    print("dataset: 900 + 100 points from two 1-D Gaussians at 0 and 6\n")
    for c in (0.0, 1.0, 10.0):
        rep = dl.fit(data, dl.TrainConfig(k=2, iters=150, seed=7,
                                          wsd_weight=c))
        w = np.sort(rep.final_model.weights())
        print(f"c = {c:4.1f}:  weights = [{w[0]:.4f}, {w[1]:.4f}]"
              f"  std = {dl.weight_std(rep.final_model):.5f}")


if __name__ == "__main__":
    main()
