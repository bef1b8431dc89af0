"""Command-line workflow: simulate, fit, sweep, compare, predict, export-ui."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from hexlift import io as hio
from hexlift.diagnostics import predict_2d
from hexlift.hexgrid import default_b1
from hexlift.metrics import TABLE_COLUMNS, MetricTable, build_metric_table
from hexlift.pipeline import FitResult, fit_layout
from hexlift.scaling import RawLayout, scale_layout
from hexlift.simdata import COLUMN_NAMES, SyntheticSpec, gen_2nc7
from hexlift.tour import tour_frames
from hexlift.tuning import (
    DEFAULT_CUTOFFS,
    FIELDS as TUNING_FIELDS,
    default_b1_grid,
    sweep_b1,
    sweep_cutoff,
)


def _apply_thread_cap() -> None:
    cap = os.environ.get("HEXLIFT_MAX_THREADS")
    if cap:
        for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
            os.environ.setdefault(var, cap)


def _load_pair(data_path: str, layout_path: str, preserve_ratio: bool):
    dataset = hio.load_csv(data_path, kind="data")
    raw = hio.load_csv(layout_path, kind="layout")
    if raw.n != dataset.n:
        raise SystemExit(
            f"row count mismatch: data has {dataset.n} rows, "
            f"layout {layout_path} has {raw.n}"
        )
    return dataset, scale_layout(raw, preserve_ratio=preserve_ratio)


def _grid_params(fit: FitResult) -> dict:
    g = fit.grid
    return {"b1": g.b1, "b2": g.b2, "a1": g.a1, "a2": g.a2, "q": g.q,
            "cutoff": fit.cutoff, "r2": g.r2}


def _layout_entry(fit: FitResult, tuning=None) -> dict:
    entry = hio.scaled_layout_dict(fit.layout)
    entry["model"] = hio.model_dict(fit.model, fit.binning, _grid_params(fit))
    entry["residuals"] = {"e": fit.residuals.e.tolist(), "hbe": fit.residuals.hbe}
    if tuning is not None:
        entry["tuning"] = [r.as_dict() for r in tuning]
    return entry


def cmd_simulate(args) -> int:
    spec = SyntheticSpec(n_per_cluster=args.n_per_cluster, noise_sd=args.noise_sd,
                         separation=args.separation, seed=args.seed)
    data, labels = gen_2nc7(spec)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    hio.write_matrix_csv(out / "data.csv", list(COLUMN_NAMES), data)
    hio.write_matrix_csv(out / "labels.csv", ["label"], labels[:, None])
    print(f"wrote {out / 'data.csv'} ({data.shape[0]} x {data.shape[1]}) "
          f"and {out / 'labels.csv'}")
    return 0


def cmd_fit(args) -> int:
    dataset, layout = _load_pair(args.data, args.layout, not args.no_preserve_ratio)
    fit = fit_layout(dataset.values, layout, b1=args.b1, q=args.buffer,
                     cutoff=args.cutoff)
    bundle = {
        "schema_version": hio.SCHEMA_VERSION,
        "dataset_ref": {"path": str(args.data), "n": dataset.n, "p": dataset.p},
        "layouts": [_layout_entry(fit)],
    }
    hio.validate_bundle(bundle)
    hio.write_bundle(args.out, bundle)
    print(f"hbe={fit.residuals.hbe!r}")
    return 0


def cmd_sweep(args) -> int:
    dataset, layout = _load_pair(args.data, args.layout, not args.no_preserve_ratio)
    b1_values = args.b1 or default_b1_grid(layout.n, layout.r2)
    if args.cutoffs:
        records = sweep_cutoff(dataset.values, layout, b1_values,
                               tuple(args.cutoffs), q=args.buffer)
    else:
        records = sweep_b1(dataset.values, layout, b1_values,
                           cutoff=args.cutoff, q=args.buffer)
    _write_tuning_csv(args.out, records)
    if args.plot_json:
        hio.write_bundle(args.plot_json, _plot_series({layout.layout_id: records}))
    print(f"wrote {len(records)} tuning records to {args.out}")
    return 0


def _write_tuning_csv(path, records) -> None:
    rows = [[getattr(r, f) for f in TUNING_FIELDS] for r in records]
    import csv

    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(TUNING_FIELDS)
        for row in rows:
            writer.writerow([v if isinstance(v, str) else hio._fmt(v) for v in row])


def _plot_series(records_by_layout: dict) -> dict:
    """Series pre-shaped for the UI's four tuning panels."""
    panels = {
        "hbe_vs_a1": ("a1", "hbe"),
        "hbe_vs_mean_count": ("mean_count", "hbe"),
        "nonempty_frac_vs_a1": ("a1", "nonempty_frac"),
        "hbe_vs_cutoff": ("cutoff", "hbe"),
    }
    out = {}
    for name, (xf, yf) in panels.items():
        series = []
        for layout_id, records in records_by_layout.items():
            pts = sorted((getattr(r, xf), getattr(r, yf)) for r in records)
            series.append({"layout_id": layout_id,
                           "x": [p[0] for p in pts], "y": [p[1] for p in pts]})
        out[name] = series
    return out


def _metric_table_dict(table: MetricTable) -> dict:
    return {
        "layout_ids": list(table.layout_ids),
        "columns": {
            "hbe": table.hbe.tolist(),
            "rta": table.rta.tolist(),
            "sc": table.sc.tolist(),
            "r_rta": table.r_rta.tolist(),
            "r_sc": table.r_sc.tolist(),
        },
        "normalized": {k: table.normalized[k].tolist() for k in TABLE_COLUMNS},
        "normalization": {k: list(table.normalization[k]) for k in TABLE_COLUMNS},
        "reference_a1": table.reference_a1,
    }


def _write_metric_csv(path, table: MetricTable) -> None:
    import csv

    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh)
        header = ["layout_id", *TABLE_COLUMNS, "rta", "sc",
                  *(f"{c}_norm" for c in TABLE_COLUMNS)]
        writer.writerow(header)
        for i, lid in enumerate(table.layout_ids):
            row = [lid,
                   hio._fmt(table.hbe[i]), hio._fmt(table.r_rta[i]), hio._fmt(table.r_sc[i]),
                   hio._fmt(table.rta[i]), hio._fmt(table.sc[i]),
                   *(hio._fmt(table.normalized[c][i]) for c in TABLE_COLUMNS)]
            writer.writerow(row)


def cmd_compare(args) -> int:
    dataset = hio.load_csv(args.data, kind="data")
    raws = []
    for path in args.layout:
        raw = hio.load_csv(path, kind="layout")
        if raw.n != dataset.n:
            raise SystemExit(
                f"row count mismatch: data has {dataset.n} rows, "
                f"layout {path} has {raw.n}"
            )
        raws.append(raw)
    if len(raws) < 2:
        raise SystemExit("compare needs at least 2 layouts")
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    reference_b1 = args.reference_b1 or default_b1(dataset.n)
    reference_a1 = (1.0 + 2.0 * args.buffer) / (reference_b1 - 1)
    table = build_metric_table(raws, dataset.values, reference_a1, q=args.buffer,
                               seed=args.seed)
    _write_metric_csv(out_dir / "metric_table.csv", table)

    records_by_layout = {}
    all_records = []
    for raw in raws:
        layout = scale_layout(raw, preserve_ratio=True)
        b1_values = args.b1 or default_b1_grid(layout.n, layout.r2)
        records = sweep_b1(dataset.values, layout, b1_values, q=args.buffer)
        records_by_layout[raw.layout_id] = records
        all_records.extend(records)
    _write_tuning_csv(out_dir / "tuning.csv", all_records)

    # flag the lowest-HBE layout at each binwidth
    by_a1: dict[float, list] = {}
    for r in all_records:
        by_a1.setdefault(round(r.a1, 12), []).append(r)
    best_by_a1 = [
        {"a1": a1, "layout_id": min(rs, key=lambda r: (r.hbe, r.layout_id)).layout_id}
        for a1, rs in sorted(by_a1.items())
    ]

    combined = {
        "schema_version": hio.SCHEMA_VERSION,
        "dataset_ref": {"path": str(args.data), "n": dataset.n, "p": dataset.p},
        "layouts": [
            {**hio.scaled_layout_dict(scale_layout(raw, preserve_ratio=True)),
             "tuning": [r.as_dict() for r in records_by_layout[raw.layout_id]]}
            for raw in raws
        ],
        "metrics": _metric_table_dict(table),
        "best_by_a1": best_by_a1,
    }
    hio.validate_bundle(combined)
    hio.write_bundle(out_dir / "compare.json", combined)
    hio.write_bundle(out_dir / "metric_table.json", _metric_table_dict(table))
    print(f"wrote {out_dir}/metric_table.csv, tuning.csv, compare.json")
    return 0


def cmd_predict(args) -> int:
    bundle = hio.read_bundle(args.model)
    hio.validate_bundle(bundle)
    entry = None
    for layout in bundle["layouts"]:
        if args.layout_id is None or layout["layout_id"] == args.layout_id:
            entry = layout
            break
    if entry is None or "model" not in entry:
        raise SystemExit("bundle has no fitted model for the requested layout")
    model = hio.model_from_dict(entry["model"])
    new_data = hio.load_csv(args.input, kind="data")
    if new_data.p != model.centroids_pd.shape[1]:
        raise SystemExit(
            f"input has p={new_data.p} but model expects p={model.centroids_pd.shape[1]}"
        )
    pred = predict_2d(new_data.values, model)
    if args.out:
        hio.write_matrix_csv(args.out, ["emb1", "emb2"], pred)
    else:
        print("emb1,emb2")
        for row in pred:
            print(f"{row[0]!r},{row[1]!r}")
    return 0


def cmd_export_ui(args) -> int:
    dataset = hio.load_csv(args.data, kind="data")
    raws = []
    for path in args.layout:
        raw = hio.load_csv(path, kind="layout")
        if raw.n != dataset.n:
            raise SystemExit(
                f"row count mismatch: data has {dataset.n} rows, "
                f"layout {path} has {raw.n}"
            )
        raws.append(raw)

    layouts = []
    for raw in raws:
        layout = scale_layout(raw, preserve_ratio=True)
        fit = fit_layout(dataset.values, layout, b1=args.b1, q=args.buffer,
                         cutoff=args.cutoff)
        records = sweep_b1(dataset.values, layout,
                           default_b1_grid(layout.n, layout.r2), q=args.buffer)
        layouts.append(_layout_entry(fit, tuning=records))

    bundle = {
        "schema_version": hio.SCHEMA_VERSION,
        "dataset": {"column_names": list(dataset.column_names),
                    "values": dataset.values.tolist()},
        "layouts": layouts,
    }
    if args.labels:
        labels = hio._parse_matrix(args.labels)[1]
        bundle["labels"] = [int(v) for v in labels[:, 0]]
    if len(raws) >= 2:
        reference_b1 = args.b1 or default_b1(dataset.n)
        reference_a1 = (1.0 + 2.0 * args.buffer) / (reference_b1 - 1)
        table = build_metric_table(raws, dataset.values, reference_a1,
                                   q=args.buffer, seed=args.seed)
        bundle["metrics"] = _metric_table_dict(table)
    path_frames = tour_frames(dataset.p, n_bases=args.tour_bases,
                              steps=1, seed=args.seed)
    bundle["tour"] = {
        "bases": [f.basis.tolist() for f in path_frames.frames],
        "steps_per_segment": args.tour_steps,
    }
    hio.validate_bundle(bundle)
    hio.write_bundle(args.out, bundle)
    print(f"wrote UI bundle to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexlift",
        description="Evaluate 2-D NLDR layouts by lifting a hexbin wireframe "
                    "model into the data space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="generate the two-cluster 7-D benchmark")
    p.add_argument("--n-per-cluster", type=int, default=1000)
    p.add_argument("--noise-sd", type=float, default=0.05)
    p.add_argument("--separation", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_simulate)

    def add_common(p, layout_multi=False):
        p.add_argument("--data", required=True)
        if layout_multi:
            p.add_argument("--layout", action="append", required=True)
        else:
            p.add_argument("--layout", required=True)
        p.add_argument("--buffer", type=float, default=0.1, metavar="Q")
        p.add_argument("--no-preserve-ratio", action="store_true")

    p = sub.add_parser("fit", help="fit the wireframe model for one layout")
    add_common(p)
    p.add_argument("--b1", type=int, default=None)
    p.add_argument("--cutoff", type=float, default=0.0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("sweep", help="sweep b1 (and optionally cutoffs)")
    add_common(p)
    p.add_argument("--b1", type=int, nargs="*", default=None)
    p.add_argument("--cutoff", type=float, default=0.0)
    p.add_argument("--cutoffs", type=float, nargs="*", default=None)
    p.add_argument("--out", required=True)
    p.add_argument("--plot-json", default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("compare", help="compare several layouts")
    add_common(p, layout_multi=True)
    p.add_argument("--b1", type=int, nargs="*", default=None)
    p.add_argument("--reference-b1", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("predict", help="predict 2-D positions for new data")
    p.add_argument("--model", required=True, help="bundle JSON from `fit`")
    p.add_argument("--input", required=True)
    p.add_argument("--layout-id", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("export-ui", help="build the full bundle for the viewer")
    add_common(p, layout_multi=True)
    p.add_argument("--b1", type=int, default=None)
    p.add_argument("--cutoff", type=float, default=0.0)
    p.add_argument("--labels", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tour-bases", type=int, default=3)
    p.add_argument("--tour-steps", type=int, default=30)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export_ui)

    return parser


def main(argv=None) -> int:
    _apply_thread_cap()
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
