"""Clustering evaluation: adjusted Rand index, normalized mutual
information, and best-match (Hungarian) top-1 accuracy."""

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment


@dataclass
class ContingencyTable:
    counts: np.ndarray   # (R, C) integer co-occurrence counts
    row_sums: np.ndarray
    col_sums: np.ndarray
    n: int


def contingency(true_labels, pred_labels):
    t, p = _check_pair(true_labels, pred_labels)
    _, ti = np.unique(t, return_inverse=True)
    _, pi = np.unique(p, return_inverse=True)
    counts = np.zeros((ti.max() + 1, pi.max() + 1), dtype=np.int64)
    np.add.at(counts, (ti, pi), 1)
    return ContingencyTable(counts=counts, row_sums=counts.sum(axis=1),
                            col_sums=counts.sum(axis=0), n=len(t))


def _check_pair(true_labels, pred_labels):
    t = np.asarray(true_labels, dtype=int)
    p = np.asarray(pred_labels, dtype=int)
    if t.ndim != 1 or t.shape != p.shape:
        raise ValueError("label vectors must be 1-D and of equal length")
    if len(t) < 2:
        raise ValueError("need at least 2 samples")
    return t, p


def _comb2(x):
    x = np.asarray(x, dtype=np.int64)
    return x * (x - 1) // 2


def ari(true_labels, pred_labels):
    """Adjusted Rand index via pair counting; 1 for identical partitions,
    expectation approximately 0 under independent labelings."""
    table = contingency(true_labels, pred_labels)
    sum_ij = int(_comb2(table.counts).sum())
    sum_a = int(_comb2(table.row_sums).sum())
    sum_b = int(_comb2(table.col_sums).sum())
    pairs = int(_comb2(table.n))
    expected = sum_a * sum_b / pairs
    maximum = (sum_a + sum_b) / 2.0
    if maximum == expected:
        # Both partitions trivial (all singletons or one cluster): identical.
        return 1.0
    return (sum_ij - expected) / (maximum - expected)


def nmi(true_labels, pred_labels):
    """2 MI / (H(U) + H(V)) with natural logs; 0 when both entropies vanish."""
    table = contingency(true_labels, pred_labels)
    n = table.n
    pu = table.row_sums / n
    pv = table.col_sums / n
    h_u = float(-np.sum(pu[pu > 0] * np.log(pu[pu > 0])))
    h_v = float(-np.sum(pv[pv > 0] * np.log(pv[pv > 0])))
    if h_u + h_v == 0.0:
        return 0.0
    nz = table.counts > 0
    p_uv = table.counts[nz] / n
    outer = np.outer(pu, pv)[nz]
    mi = float(np.sum(p_uv * np.log(p_uv / outer)))
    return 2.0 * mi / (h_u + h_v)


def hungarian(cost):
    """Minimum-cost one-to-one assignment; perm[i] is the column of row i."""
    cost = np.asarray(cost, dtype=float)
    if cost.ndim != 2 or cost.shape[0] != cost.shape[1]:
        raise ValueError(f"cost matrix must be square, got shape {cost.shape}")
    if not np.all(np.isfinite(cost)):
        raise ValueError("cost matrix contains non-finite entries")
    rows, cols = linear_sum_assignment(cost)
    perm = np.empty(cost.shape[0], dtype=int)
    perm[rows] = cols
    return perm


def acc(true_labels, pred_labels):
    """Top-1 accuracy under the best one-to-one mapping of predicted
    clusters to true classes (Hungarian on the negated contingency table)."""
    table = contingency(true_labels, pred_labels)
    r, c = table.counts.shape
    side = max(r, c)
    padded = np.zeros((side, side), dtype=np.int64)
    padded[:r, :c] = table.counts
    perm = hungarian(-padded.astype(float))
    matched = int(padded[np.arange(side), perm].sum())
    return matched / table.n


def report(true_labels, pred_labels):
    """Metric summary in the shape emitted by the CLI eval command."""
    t, p = _check_pair(true_labels, pred_labels)
    return {
        "acc": acc(t, p),
        "nmi": nmi(t, p),
        "ari": ari(t, p),
        "n": int(len(t)),
        "k_true": int(len(np.unique(t))),
        "k_pred": int(len(np.unique(p))),
    }
