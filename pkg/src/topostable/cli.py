"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 data or pipeline error. Messages go
to stderr; data goes to files or stdout.
"""

import argparse
import struct
import sys
from pathlib import Path

from . import __version__
from .datasets import IDX_IMAGE_MAGIC, gen_helix, gen_punctured_sphere, gen_swiss_roll, load_csv, load_idx
from .errors import TopoStableError
from .geodesic import residual_variance
from .pipeline import (
    RunConfig,
    compare_methods,
    isomap_embed,
    write_embedding_csv,
    write_report_csv,
    write_scatter_svg,
)

GENERATORS = {
    "helix": gen_helix,
    "swissroll": gen_swiss_roll,
    "sphere": gen_punctured_sphere,
}


def _k_list(text):
    try:
        values = [int(v) for v in text.split(",") if v != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad k list: {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("k list is empty")
    return values


def _add_run_flags(p):
    p.add_argument("--k", type=int, required=True, help="neighbor count")
    p.add_argument("--m", type=int, default=2, help="embedding dimension")
    p.add_argument("--dim-w", type=int, default=2, help="local subspace dimension")
    p.add_argument("--delta-theta", type=float, default=5.0, help="angle window half-width, degrees")
    p.add_argument(
        "--shortest-path", choices=["floyd", "dijkstra"], default="floyd", help="all-pairs algorithm"
    )


def _add_input_flags(p):
    p.add_argument("--in", dest="infile", required=True, help="input CSV or IDX image file")
    p.add_argument("--labels", help="IDX label file (IDX input only)")
    p.add_argument("--take-first", type=int, help="keep only the first N images (IDX input only)")
    p.add_argument("--sample-random", action="store_true", help="random subset instead of first N")
    p.add_argument("--seed", type=int, default=0, help="seed for --sample-random")


def build_parser():
    parser = argparse.ArgumentParser(prog="topostable", description="Isomap with angle-filtered neighbor selection")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a synthetic manifold sample as CSV")
    g.add_argument("--manifold", required=True, choices=sorted(GENERATORS))
    g.add_argument("--n", type=int, required=True, help="number of points")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", default="-", help="output CSV path, - for stdout")
    g.set_defaults(func=_cmd_generate)

    e = sub.add_parser("embed", help="embed a dataset and write coordinates")
    _add_input_flags(e)
    e.add_argument("--method", choices=["standard", "stable"], default="stable")
    _add_run_flags(e)
    e.add_argument("--out", default="-", help="embedding CSV path, - for stdout")
    e.add_argument("--svg", help="optional scatter plot path")
    e.set_defaults(func=_cmd_embed)

    c = sub.add_parser("compare", help="residual-variance sweep over k for both methods")
    _add_input_flags(c)
    c.add_argument("--method", choices=["standard", "stable", "both"], default="both")
    c.add_argument("--k", type=_k_list, required=True, help="comma-separated k values")
    c.add_argument("--m", type=int, default=2)
    c.add_argument("--dim-w", type=int, default=2)
    c.add_argument("--delta-theta", type=float, default=5.0)
    c.add_argument("--shortest-path", choices=["floyd", "dijkstra"], default="floyd")
    c.add_argument("--out", default="-", help="report CSV path, - for stdout")
    c.set_defaults(func=_cmd_compare)

    v = sub.add_parser("version", help="print the package version")
    v.set_defaults(func=_cmd_version)
    return parser


def _is_idx(path):
    with open(path, "rb") as fh:
        head = fh.read(4)
    return len(head) == 4 and struct.unpack(">I", head)[0] == IDX_IMAGE_MAGIC


def _load_input(args):
    if _is_idx(args.infile):
        return load_idx(
            args.infile,
            labels_path=args.labels,
            take_first=args.take_first,
            sample_random=args.sample_random,
            seed=args.seed,
        )
    return load_csv(args.infile)


def _out_handle(path):
    return sys.stdout if path == "-" else open(path, "w", encoding="utf-8")


def _cmd_generate(args):
    sample = GENERATORS[args.manifold](args.n, args.seed)
    fh = _out_handle(args.out)
    try:
        for row in sample.data.points:
            fh.write(",".join(f"{v:.17g}" for v in row) + "\n")
    finally:
        if fh is not sys.stdout:
            fh.close()
    print(f"wrote {sample.data.n} {args.manifold} points", file=sys.stderr)
    return 0


def _cmd_embed(args):
    data = _load_input(args)
    cfg = RunConfig(
        method=args.method,
        k=args.k,
        m=args.m,
        dim_w=args.dim_w,
        delta_theta_deg=args.delta_theta,
        shortest_path=args.shortest_path,
    )
    emb, gm, kept, graph = isomap_embed(data, cfg)
    rv = residual_variance(gm, emb)
    fh = _out_handle(args.out)
    try:
        write_embedding_csv(emb, kept, data.labels, fh)
    finally:
        if fh is not sys.stdout:
            fh.close()
    if args.svg:
        sub_labels = None if data.labels is None else data.labels[kept]
        write_scatter_svg(emb, sub_labels, args.svg)
    print(
        f"embedded {kept.size}/{data.n} points, {graph.n_edges} edges, "
        f"residual variance {rv:.6g}",
        file=sys.stderr,
    )
    return 0


def _cmd_compare(args):
    data = _load_input(args)
    methods = ("standard", "stable") if args.method == "both" else (args.method,)
    base = RunConfig(
        method="standard",
        k=args.k[0],
        m=args.m,
        dim_w=args.dim_w,
        delta_theta_deg=args.delta_theta,
        shortest_path=args.shortest_path,
    )
    report = compare_methods(data, args.k, base, methods=methods)
    fh = _out_handle(args.out)
    try:
        write_report_csv(report, fh)
    finally:
        if fh is not sys.stdout:
            fh.close()
    failures = [r for r in report.rows if r.error is not None]
    for r in failures:
        print(f"cell k={r.k} method={r.method} failed: {r.error}", file=sys.stderr)
    print(f"compared {len(report.rows)} cells ({len(failures)} failed)", file=sys.stderr)
    return 0


def _cmd_version(args):
    print(__version__)
    return 0


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except (TopoStableError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
