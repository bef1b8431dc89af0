"""CSV ingestion and the JSON export bundle consumed by the UI."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from hexlift.binning import Binning
from hexlift.delaunay import EdgeList
from hexlift.lift import LiftedModel
from hexlift.scaling import RawLayout, ScaledLayout

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Dataset:
    """n x p numeric matrix; row order is the join key with layouts."""

    values: np.ndarray
    column_names: tuple[str, ...]

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 2:
            raise ValueError(f"dataset must be 2-D, got shape {values.shape}")
        if values.shape[0] < 3:
            raise ValueError(f"dataset needs at least 3 rows, got {values.shape[0]}")
        if values.shape[1] < 2:
            raise ValueError(f"dataset needs at least 2 columns, got {values.shape[1]}")
        if not np.all(np.isfinite(values)):
            bad = np.argwhere(~np.isfinite(values))[0]
            raise ValueError(f"non-finite value at row {bad[0]}, column {bad[1]}")
        if len(set(self.column_names)) != len(self.column_names):
            raise ValueError("column names are not unique")
        if len(self.column_names) != values.shape[1]:
            raise ValueError("column name count does not match column count")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "column_names", tuple(self.column_names))

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def p(self) -> int:
        return self.values.shape[1]


def _parse_matrix(path: str | Path) -> tuple[list[str], np.ndarray]:
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: file is empty (missing header)") from None
        header = [h.strip() for h in header]
        if any(_is_number(h) for h in header):
            raise ValueError(f"{path}: missing header row")
        rows = []
        for lineno, row in enumerate(reader, start=1):
            if not row:
                continue
            if len(row) != len(header):
                raise ValueError(
                    f"{path}: row {lineno} has {len(row)} fields, expected {len(header)}"
                )
            parsed = []
            for col, cell in enumerate(row):
                try:
                    value = float(cell)
                except ValueError:
                    raise ValueError(
                        f"{path}: non-numeric cell at row {lineno}, column {col} ({cell!r})"
                    ) from None
                if not np.isfinite(value):
                    raise ValueError(
                        f"{path}: non-finite cell at row {lineno}, column {col} ({cell!r})"
                    )
                parsed.append(value)
            rows.append(parsed)
    if not rows:
        raise ValueError(f"{path}: no data rows")
    return header, np.asarray(rows, dtype=float)


def _is_number(s: str) -> bool:
    try:
        float(s)
        return True
    except ValueError:
        return False


def load_csv(path: str | Path, kind: str = "data",
             layout_id: str | None = None) -> Dataset | RawLayout:
    """Load a data matrix (``kind='data'``) or a 2-column layout
    (``kind='layout'``, header ``emb1,emb2``)."""
    header, values = _parse_matrix(path)
    if kind == "data":
        return Dataset(values=values, column_names=tuple(header))
    if kind == "layout":
        if values.shape[1] != 2:
            raise ValueError(
                f"{path}: layout file must have exactly 2 columns, got {values.shape[1]}"
            )
        return RawLayout(points=values, layout_id=layout_id or Path(path).stem)
    raise ValueError(f"unknown kind {kind!r}")


def write_matrix_csv(path: str | Path, header: list[str], values: np.ndarray) -> None:
    values = np.asarray(values)
    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in values:
            writer.writerow([_fmt(v) for v in row])


def _fmt(v) -> str:
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return repr(float(v))


# ---------------------------------------------------------------------------
# export bundle


def scaled_layout_dict(layout: ScaledLayout) -> dict:
    return {
        "layout_id": layout.layout_id,
        "points": layout.points.tolist(),
        "r2": layout.r2,
        "preserve_ratio": layout.preserve_ratio,
        "axes_swapped": layout.axes_swapped,
    }


def model_dict(model: LiftedModel, binning: Binning, params: dict) -> dict:
    n = binning.n
    bins = []
    for row, bin_id in enumerate(model.bin_ids):
        count = int(binning.counts[bin_id])
        bins.append({
            "id": int(bin_id),
            "c2d": model.centroids2d[row].tolist(),
            "cpd": model.centroids_pd[row].tolist(),
            "count": count,
            "w": count / n,
        })
    edges = []
    if model.edges is not None:
        edges = [list(e) for e in sorted(model.edges.edges)]
    return {"bins": bins, "edges": edges, "params": params}


def model_from_dict(d: dict) -> LiftedModel:
    bins = d["bins"]
    centroids2d = np.asarray([b["c2d"] for b in bins], dtype=float)
    centroids_pd = np.asarray([b["cpd"] for b in bins], dtype=float)
    bin_ids = np.asarray([b["id"] for b in bins], dtype=int)
    edges = d.get("edges") or []
    edge_list = EdgeList(
        edges=frozenset((int(a), int(b)) for a, b in edges), triangles=()
    ) if edges else None
    return LiftedModel(centroids2d=centroids2d, centroids_pd=centroids_pd,
                       edges=edge_list, bin_ids=bin_ids,
                       cutoff=float(d["params"].get("cutoff", 0.0)))


def write_bundle(path: str | Path, bundle: dict) -> None:
    with Path(path).open("w") as fh:
        json.dump(bundle, fh, separators=(",", ":"), allow_nan=False)
        fh.write("\n")


def read_bundle(path: str | Path) -> dict:
    with Path(path).open() as fh:
        return json.load(fh)


def schema_path() -> Path:
    return Path(__file__).parent / "bundle_schema.json"


def validate_bundle(bundle: dict) -> None:
    """Structural checks: schema version, cross-references, edge endpoints."""
    if bundle.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(
            f"unsupported schema_version {bundle.get('schema_version')!r}"
        )
    for layout in bundle.get("layouts", []):
        n = len(layout["points"])
        model = layout.get("model")
        if model is not None:
            m = len(model["bins"])
            for a, b in model.get("edges", []):
                if not (0 <= a < m and 0 <= b < m):
                    raise ValueError(
                        f"edge ({a},{b}) references a missing bin (m={m})"
                    )
        res = layout.get("residuals")
        if res is not None and len(res["e"]) != n:
            raise ValueError(
                f"residual count {len(res['e'])} does not match n={n}"
            )
