"""Evaluate 2-D NLDR layouts as models of the high-dimensional data.

A layout is scaled to a standard range, covered with a hexagon grid,
and each observation is binned to its nearest centroid.  Occupied bin
centroids are connected by a Delaunay triangulation and lifted into the
original p-D space by averaging member observations, giving a wireframe
model whose fit is summarized by per-observation residuals and the
hexbin error (HBE).  Lower HBE means the layout is a less misleading
summary of the data.
"""

from hexlift.scaling import RawLayout, ScaledLayout, scale_layout
from hexlift.hexgrid import GridConfig, HexGrid, compute_b2, build_grid, default_b1
from hexlift.binning import Binning, assign_bins, bin_centers_2d
from hexlift.delaunay import EdgeList, triangulate
from hexlift.lift import LiftedModel, lift, remove_low_count
from hexlift.diagnostics import ResidualSet, residuals, predict_2d
from hexlift.metrics import (
    MetricTable,
    random_triplet_accuracy,
    shepard_spearman,
    build_metric_table,
)
from hexlift.tuning import (
    DEFAULT_CUTOFFS,
    TuningRecord,
    sweep_b1,
    sweep_cutoff,
    default_b1_grid,
)
from hexlift.pipeline import FitResult, fit_layout
from hexlift.simdata import SyntheticSpec, gen_2nc7, true_layout
from hexlift.tour import (
    ProjectionBasis,
    TourPath,
    random_basis,
    geodesic_path,
    tour_frames,
    project,
    principal_angles,
)
from hexlift.io import (
    Dataset,
    load_csv,
    write_bundle,
    read_bundle,
    validate_bundle,
)

__all__ = [
    "RawLayout",
    "ScaledLayout",
    "scale_layout",
    "GridConfig",
    "HexGrid",
    "compute_b2",
    "build_grid",
    "default_b1",
    "Binning",
    "assign_bins",
    "bin_centers_2d",
    "EdgeList",
    "triangulate",
    "LiftedModel",
    "lift",
    "remove_low_count",
    "ResidualSet",
    "residuals",
    "predict_2d",
    "MetricTable",
    "random_triplet_accuracy",
    "shepard_spearman",
    "build_metric_table",
    "DEFAULT_CUTOFFS",
    "TuningRecord",
    "sweep_b1",
    "sweep_cutoff",
    "default_b1_grid",
    "FitResult",
    "fit_layout",
    "SyntheticSpec",
    "gen_2nc7",
    "true_layout",
    "ProjectionBasis",
    "TourPath",
    "random_basis",
    "geodesic_path",
    "tour_frames",
    "project",
    "principal_angles",
    "Dataset",
    "load_csv",
    "write_bundle",
    "read_bundle",
    "validate_bundle",
]
