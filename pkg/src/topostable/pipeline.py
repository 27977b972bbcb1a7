"""End-to-end embedding runs, method comparisons, and file outputs."""

import contextlib
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import BadDimError, TopoStableError
from .geodesic import (
    classical_mds,
    dijkstra_all_pairs,
    floyd_all_pairs,
    largest_component,
    residual_variance,
)
from .graph import SelectorConfig, build_graph

__all__ = [
    "RunConfig",
    "ReportRow",
    "ComparisonReport",
    "isomap_embed",
    "compare_methods",
    "write_embedding_csv",
    "write_report_csv",
    "write_scatter_svg",
]

METHODS = ("standard", "stable")


@dataclass(frozen=True)
class RunConfig:
    """Knobs for one pipeline run; defaults mirror the reference experiments
    (delta_theta 5 degrees, 2-D local subspace, 2-D embedding)."""

    method: str
    k: int
    m: int = 2
    dim_w: int = 2
    delta_theta_deg: float = 5.0
    shortest_path: str = "floyd"

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        if self.shortest_path not in ("floyd", "dijkstra"):
            raise ValueError(f"shortest_path must be floyd or dijkstra, got {self.shortest_path!r}")
        if self.m < 1:
            raise ValueError("m must be positive")
        if self.k < 1:
            raise ValueError("k must be positive")

    def selector(self):
        return SelectorConfig(k=self.k, dim_w=self.dim_w, delta_theta_deg=self.delta_theta_deg)


@contextlib.contextmanager
def _stage(name):
    """Prefix pipeline errors with the stage that produced them."""
    try:
        yield
    except TopoStableError as exc:
        raise type(exc)(f"{name}: {exc}") from exc


def isomap_embed(data, cfg):
    """Full pipeline: neighbor graph, geodesics, largest component, MDS.

    Returns (embedding, geodesic_matrix, kept_indices, graph) where the
    geodesic matrix is restricted to the embedded (largest) component and
    kept_indices maps its rows back to original point ids.
    """
    with _stage("neighbor graph"):
        graph = build_graph(data, cfg.selector(), cfg.method)
    apsp = floyd_all_pairs if cfg.shortest_path == "floyd" else dijkstra_all_pairs
    with _stage("shortest paths"):
        gm_full = apsp(graph)
    sub_data, gm, kept = largest_component(gm_full, data)
    with _stage("classical MDS"):
        emb = classical_mds(gm, cfg.m)
    return emb, gm, kept, graph


@dataclass(frozen=True)
class ReportRow:
    k: int
    method: str
    residual_variance: float
    n_embedded: int
    n_dropped: int
    n_edges: int
    clipped_dims: int
    error: str | None = None


@dataclass(frozen=True)
class ComparisonReport:
    rows: tuple = field(default_factory=tuple)


def compare_methods(data, k_values, base_cfg, methods=METHODS):
    """Run the pipeline for every (k, method) cell and collect one row each.

    A failed cell (selector degeneracy, disconnection artifacts, config
    invalid for this data) is recorded as a marker row with residual
    variance NaN and all points counted as dropped, instead of aborting
    the sweep.
    """
    rows = []
    for k in k_values:
        for method in methods:
            cfg = replace(base_cfg, method=method, k=int(k))
            try:
                emb, gm, kept, graph = isomap_embed(data, cfg)
                rv = residual_variance(gm, emb)
                rows.append(
                    ReportRow(
                        k=int(k),
                        method=method,
                        residual_variance=rv,
                        n_embedded=int(kept.size),
                        n_dropped=data.n - int(kept.size),
                        n_edges=graph.n_edges,
                        clipped_dims=emb.n_clipped,
                    )
                )
            except (TopoStableError, ValueError) as exc:
                rows.append(
                    ReportRow(
                        k=int(k),
                        method=method,
                        residual_variance=float("nan"),
                        n_embedded=0,
                        n_dropped=data.n,
                        n_edges=0,
                        clipped_dims=0,
                        error=str(exc),
                    )
                )
    return ComparisonReport(rows=tuple(rows))


def _fmt(x):
    return f"{x:.17g}"


@contextlib.contextmanager
def _open_out(path_or_file):
    if hasattr(path_or_file, "write"):
        yield path_or_file
    else:
        with open(path_or_file, "w", encoding="utf-8") as fh:
            yield fh


def write_embedding_csv(emb, kept_indices, labels, out):
    """Embedding rows as `index,label,y1..ym` with 17 significant digits.

    kept_indices maps embedding rows to original point ids; labels (length
    of the original dataset) may be None, in which case -1 is written so the
    file stays fully numeric.
    """
    kept_indices = np.asarray(kept_indices, dtype=np.int64)
    if kept_indices.size != emb.coords.shape[0]:
        raise ValueError("kept_indices length must match the embedding row count")
    with _open_out(out) as fh:
        fh.write("index,label," + ",".join(f"y{j + 1}" for j in range(emb.m)) + "\n")
        for row, orig in enumerate(kept_indices):
            lab = -1 if labels is None else int(labels[orig])
            coords = ",".join(_fmt(c) for c in emb.coords[row])
            fh.write(f"{int(orig)},{lab},{coords}\n")


def write_report_csv(report, out):
    """Comparison report as CSV; failed cells carry residual_variance=nan."""
    with _open_out(out) as fh:
        fh.write("k,method,residual_variance,n_embedded,n_dropped,n_edges,clipped_dims\n")
        for r in report.rows:
            fh.write(
                f"{r.k},{r.method},{_fmt(r.residual_variance)},"
                f"{r.n_embedded},{r.n_dropped},{r.n_edges},{r.clipped_dims}\n"
            )


_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def _axis_range(values):
    lo, hi = float(values.min()), float(values.max())
    if hi == lo:  # degenerate extent: fall back to a unit box
        return lo - 0.5, hi + 0.5
    margin = 0.05 * (hi - lo)
    return lo - margin, hi + margin


def write_scatter_svg(emb, labels, out, width=640, height=480):
    """Static SVG scatter of the first two embedding coordinates.

    One circle per point; fill color keyed by label when labels are given.
    """
    if emb.m < 2:
        raise BadDimError("scatter plot needs an embedding with m >= 2")
    x, y = emb.coords[:, 0], emb.coords[:, 1]
    x0, x1 = _axis_range(x)
    y0, y1 = _axis_range(y)
    px = (x - x0) / (x1 - x0) * width
    py = (1.0 - (y - y0) / (y1 - y0)) * height

    if labels is None:
        colors = [_PALETTE[0]] * emb.coords.shape[0]
    else:
        order = {lab: i for i, lab in enumerate(sorted(set(int(v) for v in labels)))}
        colors = [_PALETTE[order[int(v)] % len(_PALETTE)] for v in labels]

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" '
        f'fill="white" stroke="black" stroke-width="1"/>',
    ]
    for cx, cy, color in zip(px, py, colors):
        parts.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="3" fill="{color}"/>')
    parts.append("</svg>")
    with _open_out(out) as fh:
        fh.write("\n".join(parts) + "\n")
