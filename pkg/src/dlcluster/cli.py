"""Command-line surface: fit / assign / eval / synth / plot."""

import argparse
import json
import sys

import numpy as np

from . import em, io, mcmarg, metrics, plot, synth
from .gmm import assign as gmm_assign
from .mcmarg import TrainRecord
from .rng import Rng


def _infer_format(path, override):
    if override:
        return override
    return "bin" if str(path).endswith(".bin") else "csv"


def _add_input(p):
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=["csv", "bin"], default=None)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dlcluster",
        description="Distribution-learning clustering toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", help="fit a GMM to a dataset")
    _add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trainer", choices=["mcmarg", "em"], default="mcmarg")
    p.add_argument("--init", choices=["kmeans", "random"], default="kmeans")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=2000)
    p.add_argument("--lr", type=float, default=1e-4)
    p.add_argument("--unit-vectors", type=int, default=32)
    p.add_argument("--grid-size", type=int, default=1024)
    p.add_argument("--wsd-weight", type=float, default=1.0)
    p.add_argument("--model-out", default=None)
    p.add_argument("--labels-out", default=None)
    p.add_argument("--log-out", default=None)

    p = sub.add_parser("assign", help="label a dataset with a saved model")
    p.add_argument("--model", required=True)
    _add_input(p)
    p.add_argument("--mode", choices=["posterior", "density"],
                   default="posterior")
    p.add_argument("--labels-out", required=True)

    p = sub.add_parser("eval", help="score predicted labels against truth")
    p.add_argument("--true", dest="true_path", required=True)
    p.add_argument("--pred", dest="pred_path", required=True)
    p.add_argument("--report-out", default=None)

    p = sub.add_parser("synth", help="generate synthetic datasets")
    synth_sub = p.add_subparsers(dest="synth_kind", required=True)
    b = synth_sub.add_parser("blobs", help="Gaussian blobs on a circle")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--counts", required=True,
                   help="per-cluster counts, comma separated (or one value)")
    b.add_argument("--sep", type=float, default=5.0)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--out", required=True)

    p = sub.add_parser("plot", help="SVG scatter of a 2-D clustering")
    _add_input(p)
    p.add_argument("--labels", required=True)
    p.add_argument("--out", required=True)
    return parser


def _cmd_fit(args):
    data = io.load_dataset(args.input, _infer_format(args.input, args.format))
    if args.trainer == "mcmarg":
        config = mcmarg.TrainConfig(
            k=args.k, iters=args.iters, lr=args.lr,
            unit_vectors_per_step=args.unit_vectors,
            wsd_weight=args.wsd_weight, grid_size=args.grid_size,
            init=args.init, seed=args.seed)
        report = mcmarg.fit(data, config)
        model = report.final_model
        history = report.history
    else:
        config = em.EmConfig(k=args.k, max_iters=args.iters,
                             init=args.init, seed=args.seed)
        result = em.em_fit(data, config)
        model = result.model
        # EM logs carry the negative log-likelihood in the kl/total columns.
        history = [TrainRecord(iteration=i, kl_term=-ll, wsd_term=0.0,
                               total=-ll)
                   for i, ll in enumerate(result.log_likelihood_history)]
    if args.model_out:
        io.save_model(model, args.model_out)
    if args.labels_out:
        io.save_labels(gmm_assign(model, data).labels, args.labels_out)
    if args.log_out:
        io.save_train_log(history, args.log_out)
    print(f"fit: trainer={args.trainer} k={args.k} n={data.n} d={data.d} "
          f"iterations={len(history)}")
    return 0


def _cmd_assign(args):
    model = io.load_model(args.model)
    data = io.load_dataset(args.input, _infer_format(args.input, args.format))
    io.save_labels(gmm_assign(model, data, mode=args.mode).labels,
                   args.labels_out)
    return 0


def _cmd_eval(args):
    true_labels = io.load_labels(args.true_path)
    pred_labels = io.load_labels(args.pred_path)
    rep = metrics.report(true_labels, pred_labels)
    if args.report_out:
        io.save_report(rep, args.report_out)
    print(json.dumps(rep))
    return 0


def _cmd_synth(args):
    if args.synth_kind != "blobs":
        raise ValueError(f"unknown generator {args.synth_kind!r}")
    counts = [int(c) for c in args.counts.split(",")]
    if len(counts) == 1:
        counts = counts * args.k
    if len(counts) != args.k:
        raise ValueError("counts must have one entry per cluster")
    angles = 2 * np.pi * np.arange(args.k) / args.k
    means = args.sep * np.stack([np.cos(angles), np.sin(angles)], axis=1)
    data = synth.make_blobs(Rng(args.seed), counts, means,
                            np.ones_like(means))
    io.save_csv(data, args.out, header=["x", "y", "label"])
    print(f"synth: wrote {data.n} points to {args.out}")
    return 0


def _cmd_plot(args):
    data = io.load_dataset(args.input, _infer_format(args.input, args.format))
    labels = io.load_labels(args.labels)
    plot.save_scatter_svg(data.points, labels, args.out)
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    handlers = {"fit": _cmd_fit, "assign": _cmd_assign, "eval": _cmd_eval,
                "synth": _cmd_synth, "plot": _cmd_plot}
    try:
        return handlers[args.command](args)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"dlcluster: {exc}", file=sys.stderr)
        return 1


def entry():
    sys.exit(main())
