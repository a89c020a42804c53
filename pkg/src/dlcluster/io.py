"""File formats: dataset CSV/BIN, label files, model JSON, metric reports,
and training-log CSV."""

import json
import struct

import numpy as np

from .dataset import Dataset
from .gmm import Gmm

BIN_MAGIC = b"DCDL"
BIN_VERSION = 1


def load_dataset(path, fmt="csv"):
    if fmt == "csv":
        return _load_csv(path)
    if fmt == "bin":
        return _load_bin(path)
    raise ValueError(f"unknown dataset format {fmt!r}")


def _parse_row(line):
    try:
        return [float(f) for f in line.split(",")]
    except ValueError:
        return None


def _load_csv(path):
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        raise ValueError(f"{path}: empty dataset file")
    header = None
    if _parse_row(lines[0]) is None:
        header = [h.strip() for h in lines[0].split(",")]
        lines = lines[1:]
        if not lines:
            raise ValueError(f"{path}: header but no data rows")
    label_col = None
    if header is not None and header[-1] == "label":
        label_col = len(header) - 1
    rows = []
    for i, ln in enumerate(lines):
        row = _parse_row(ln)
        if row is None:
            raise ValueError(f"{path}: row {i} is not numeric")
        if rows and len(row) != len(rows[0]):
            raise ValueError(f"{path}: row {i} has {len(row)} fields, "
                             f"expected {len(rows[0])}")
        if not all(np.isfinite(row)):
            raise ValueError(f"{path}: row {i} contains non-finite values")
        rows.append(row)
    mat = np.asarray(rows, dtype=float)
    if label_col is not None:
        return Dataset(points=mat[:, :label_col],
                       labels=mat[:, label_col].astype(int))
    return Dataset(points=mat)


def save_csv(dataset, path, header=None):
    with open(path, "w") as fh:
        if header is not None:
            fh.write(",".join(header) + "\n")
        for i in range(dataset.n):
            fields = [repr(float(v)) for v in dataset.points[i]]
            if header is not None and header[-1] == "label":
                fields.append(str(int(dataset.labels[i])))
            fh.write(",".join(fields) + "\n")


def _load_bin(path):
    with open(path, "rb") as fh:
        blob = fh.read()
    if blob[:4] != BIN_MAGIC:
        raise ValueError(f"{path}: bad magic bytes, not a dataset file")
    version, n, d = struct.unpack_from("<III", blob, 4)
    if version != BIN_VERSION:
        raise ValueError(f"{path}: unsupported version {version}")
    expected = 16 + 4 * n * d
    if len(blob) != expected:
        raise ValueError(f"{path}: truncated payload "
                         f"({len(blob)} bytes, expected {expected})")
    mat = np.frombuffer(blob, dtype="<f4", offset=16).reshape(n, d)
    if not np.all(np.isfinite(mat)):
        raise ValueError(f"{path}: payload contains non-finite values")
    return Dataset(points=mat.astype(float))


def save_bin(dataset, path):
    with open(path, "wb") as fh:
        fh.write(BIN_MAGIC)
        fh.write(struct.pack("<III", BIN_VERSION, dataset.n, dataset.d))
        fh.write(dataset.points.astype("<f4").tobytes())


def load_labels(path):
    with open(path) as fh:
        return np.array([int(ln) for ln in fh if ln.strip()], dtype=int)


def save_labels(labels, path):
    with open(path, "w") as fh:
        for v in labels:
            fh.write(f"{int(v)}\n")


def load_model(path):
    with open(path) as fh:
        return Gmm.from_json(fh.read())


def save_model(model, path):
    with open(path, "w") as fh:
        fh.write(model.to_json())
        fh.write("\n")


def save_report(rep, path):
    with open(path, "w") as fh:
        json.dump(rep, fh)
        fh.write("\n")


def save_train_log(history, path):
    """CSV with one row per iteration: iter,kl,wsd,total."""
    with open(path, "w") as fh:
        fh.write("iter,kl,wsd,total\n")
        for rec in history:
            fh.write(f"{rec.iteration},{float(rec.kl_term)!r},"
                     f"{float(rec.wsd_term)!r},{float(rec.total)!r}\n")
