"""Command-line front end: run the pipeline, summarize balls, generate fixtures.

`run` executes validate -> (standardize) -> cover -> graph -> layout -> render
and writes three files: the graph SVG, a results CSV (node rows then edge
rows) and a merged CSV with one row per (point, containing ball) pair. The
summary commands consume the merged CSV, so re-running the pipeline never
silently invalidates an earlier analysis.

Exit codes: 0 success, 1 validation error, 2 I/O error.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import datagen, layout, render, summary
from .cover import build_cover
from .errors import NonPositiveEpsilonError, ValidationError
from .graph import DEFAULT_BIN_COUNT, assign_bins, build_graph
from .point_cloud import RawTable, load_csv, standardize, validate_axes, write_csv
from .point_cloud import write_point_cloud_csv

RESULTS_HEADER = (
    "type", "ball", "x", "y", "size", "color_mean", "color_bin",
    "source", "target", "x2", "y2", "shared",
)


@dataclass
class RunConfig:
    input_path: str
    axes: tuple[str, ...]
    epsilon: float
    color: str | None = None
    repulsion: float = layout.DEFAULT_REPULSION
    attraction: float = layout.DEFAULT_ATTRACTION
    labels: bool = False
    standardize: bool = False
    id_column: str | None = None
    order: str = "data"
    seed: int = 0
    bins: int = DEFAULT_BIN_COUNT
    iterations: int = layout.DEFAULT_ITERATIONS
    svg_path: str = "bm_graph.svg"
    results_path: str = "bm_results.csv"
    merged_path: str = "bm_merged.csv"


def _write_results_csv(path, graph, positions):
    rows = []
    for n in graph.nodes:
        x, y = positions[n.ball]
        rows.append((
            "node", n.ball, x, y, n.size,
            "" if n.color_mean is None else n.color_mean,
            "" if n.color_bin is None else n.color_bin,
            "", "", "", "", "",
        ))
    for e in graph.edges:
        x1, y1 = positions[e.source]
        x2, y2 = positions[e.target]
        rows.append((
            "edge", "", x1, y1, "", "", "",
            e.source, e.target, x2, y2, e.shared,
        ))
    write_csv(path, RESULTS_HEADER, rows)


def _write_merged_csv(path, raw: RawTable, cover):
    header = ("ball",) + raw.column_names
    rows = []
    for ball, member_rows in enumerate(cover.members, start=1):
        for r in member_rows:
            rows.append((ball,) + raw.rows[r])
    write_csv(path, header, rows)


def cmd_run(config: RunConfig) -> None:
    if not config.epsilon > 0:
        raise NonPositiveEpsilonError()
    raw = load_csv(config.input_path)
    for name in config.axes:
        raw.column_index(name)  # fail early with the offending name
    if config.id_column is not None:
        raw.column_index(config.id_column)
        if config.id_column in config.axes or config.id_column == config.color:
            raise ValidationError(
                f"id column {config.id_column!r} cannot also be an axis or color"
            )

    cloud, _dropped = validate_axes(raw, config.axes)
    if config.standardize:
        cloud, std_spec = standardize(cloud)
        for name, mean, sd in zip(std_spec.columns, std_spec.means, std_spec.sds):
            print(f"standardized {name}: mean {mean:.6g}, sd {sd:.6g}")

    color_values = None
    if config.color is not None:
        color_values = raw.numeric_column(config.color)[list(cloud.row_ids)]

    cover = build_cover(cloud, config.epsilon, order=config.order, seed=config.seed)
    graph = build_graph(cover, color_values)
    scale = None
    if config.color is not None:
        scale, graph = assign_bins(graph, config.bins)

    positions = layout.compute_layout(
        graph, config.repulsion, config.attraction, config.iterations
    )
    options = render.RenderOptions(show_labels=config.labels)
    svg = render.render_graph_svg(graph, positions, scale, options)

    with open(config.svg_path, "w", encoding="utf-8", newline="") as f:
        f.write(svg)
    _write_results_csv(config.results_path, graph, positions)
    _write_merged_csv(config.merged_path, raw, cover)
    print(
        f"Ball mapper run complete: graph {config.svg_path}, "
        f"results {config.results_path}, merged {config.merged_path}"
    )


def cmd_ball_summary(merged_path, variables, out_path) -> None:
    raw = load_csv(merged_path)
    groups = summary.ball_groups_from_merged(raw)
    table = summary.means_over_groups(raw, groups, variables)
    table.write(out_path)
    print(f"Ball means for {len(table.rows)} balls written to {out_path}")


def cmd_variable_summary(merged_path, variable, out_path, boxplot_path=None) -> None:
    raw = load_csv(merged_path)
    groups = summary.ball_groups_from_merged(raw)
    table = summary.distribution_over_groups(raw, groups, variable)
    table.write(out_path)
    written = [str(out_path)]
    if boxplot_path is not None:
        svg = render.render_boxplot_svg(table.rows, title=variable)
        with open(boxplot_path, "w", encoding="utf-8", newline="") as f:
            f.write(svg)
        written.append(str(boxplot_path))
    print(f"Summary of {variable!r} written to {', '.join(written)}")


def cmd_gen(dataset, out_path, seed, n, k) -> None:
    if dataset == "gauss":
        cloud = datagen.gen_gaussian_cloud(n, k, seed)
    elif dataset == "x":
        cloud = datagen.gen_x_dataset(datagen.XDatasetSpec(seed=seed))
    else:
        raise ValidationError(f"unknown dataset {dataset!r} (expected 'gauss' or 'x')")
    write_point_cloud_csv(cloud, out_path)
    print(f"{cloud.n} rows written to {out_path}")


def _csv_list(text: str) -> tuple[str, ...]:
    return tuple(s.strip() for s in text.split(",") if s.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ballmapper",
        description="Cover a point cloud with fixed-radius balls and draw the overlap graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="build the cover and write SVG + CSV outputs")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--axes", required=True, type=_csv_list,
                   help="comma-separated axis column names")
    p.add_argument("--epsilon", "-e", required=True, type=float)
    p.add_argument("--color", default=None)
    p.add_argument("--repulsion", type=float, default=layout.DEFAULT_REPULSION)
    p.add_argument("--attraction", type=float, default=layout.DEFAULT_ATTRACTION)
    p.add_argument("--labels", action="store_true")
    p.add_argument("--standardize", action="store_true")
    p.add_argument("--id-col", default=None)
    p.add_argument("--order", choices=("data", "shuffle"), default="data")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bins", type=int, default=DEFAULT_BIN_COUNT)
    p.add_argument("--iterations", type=int, default=layout.DEFAULT_ITERATIONS)
    p.add_argument("--svg", default="bm_graph.svg")
    p.add_argument("--results", default="bm_results.csv")
    p.add_argument("--merged", default="bm_merged.csv")
    p.set_defaults(func=lambda a: cmd_run(RunConfig(
        input_path=a.input, axes=a.axes, epsilon=a.epsilon, color=a.color,
        repulsion=a.repulsion, attraction=a.attraction, labels=a.labels,
        standardize=a.standardize, id_column=a.id_col, order=a.order,
        seed=a.seed, bins=a.bins, iterations=a.iterations,
        svg_path=a.svg, results_path=a.results, merged_path=a.merged,
    )))

    p = sub.add_parser("ball-summary", help="per-ball means from a merged CSV")
    p.add_argument("--merged", required=True)
    p.add_argument("--variables", required=True, type=_csv_list)
    p.add_argument("--out", "-o", required=True)
    p.set_defaults(func=lambda a: cmd_ball_summary(a.merged, a.variables, a.out))

    p = sub.add_parser("variable-summary",
                       help="per-ball distribution of one variable from a merged CSV")
    p.add_argument("--merged", required=True)
    p.add_argument("--variable", required=True)
    p.add_argument("--out", "-o", required=True)
    p.add_argument("--boxplot", default=None, help="also write a boxplot SVG here")
    p.set_defaults(func=lambda a: cmd_variable_summary(a.merged, a.variable, a.out, a.boxplot))

    p = sub.add_parser("gen", help="write a synthetic benchmark CSV")
    p.add_argument("dataset", help="'gauss' or 'x'")
    p.add_argument("--out", "-o", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=1000, help="rows (gauss only)")
    p.add_argument("--k", type=int, default=2, help="dimensions (gauss only)")
    p.set_defaults(func=lambda a: cmd_gen(a.dataset, a.out, a.seed, a.n, a.k))

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
