"""Clustering metrics on hand-checkable labelings.

Run:  python demos/demo_metrics.py
"""

import numpy as np

import dlcluster as dl


def show(name, true, pred):
    true, pred = np.asarray(true), np.asarray(pred)
    print(f"{name:28s} ARI={dl.ari(true, pred):7.4f}"
          f"  NMI={dl.nmi(true, pred):7.4f}"
          f"  ACC={dl.acc(true, pred):7.4f}")


def main():
    show("identical", [0, 0, 1, 1, 2, 2], [0, 0, 1, 1, 2, 2])
    show("relabeled (permuted ids)", [0, 0, 1, 1, 2, 2], [2, 2, 0, 0, 1, 1])
    show("one point moved", [0, 0, 1, 1, 2, 2], [0, 0, 1, 1, 2, 1])
    show("everything one cluster", [0, 0, 1, 1, 2, 2], [0, 0, 0, 0, 0, 0])
    rng = dl.Rng(0)
    show("random labels (n=200)", rng.integers(0, 3, size=200),
         rng.integers(0, 3, size=200))

    cost = np.array([[4.0, 1.0, 3.0], [2.0, 0.0, 5.0], [3.0, 2.0, 2.0]])
    perm = dl.hungarian(cost)
    total = sum(cost[i, perm[i]] for i in range(3))
    print(f"\nhungarian on 3x3 cost matrix: rows -> cols {list(perm)},"
          f" total cost {total}")


if __name__ == "__main__":
    main()
