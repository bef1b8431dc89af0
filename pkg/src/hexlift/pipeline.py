"""Single-layout fit: grid -> binning -> lift -> bin removal -> residuals."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from hexlift.binning import Binning, assign_bins, bin_centers_2d
from hexlift.diagnostics import ResidualSet, residuals
from hexlift.hexgrid import GridConfig, HexGrid, build_grid, default_b1
from hexlift.lift import LiftedModel, lift, remove_low_count
from hexlift.scaling import ScaledLayout


@dataclass(frozen=True)
class FitResult:
    layout: ScaledLayout
    grid: HexGrid
    binning: Binning
    model: LiftedModel
    residuals: ResidualSet
    cutoff: float


def fit_layout(data: np.ndarray, layout: ScaledLayout, b1: int | None = None,
               q: float = 0.1, cutoff: float = 0.0,
               compute_edges: bool = True) -> FitResult:
    """Run the full model pipeline for one scaled layout."""
    data = np.asarray(data, dtype=float)
    if data.shape[0] != layout.n:
        raise ValueError(
            f"data has {data.shape[0]} rows but layout has {layout.n}"
        )
    if b1 is None:
        b1 = default_b1(layout.n)
    grid = build_grid(GridConfig(b1=b1, q=q, r2=layout.r2))
    binning = assign_bins(layout, grid)
    centers = bin_centers_2d(binning, grid)
    model = lift(binning, data, centers, compute_edges=compute_edges)
    if cutoff > 0.0:
        model, binning = remove_low_count(model, binning, layout.points, data, cutoff)
    res = residuals(data, model, binning)
    return FitResult(layout=layout, grid=grid, binning=binning, model=model,
                     residuals=res, cutoff=float(cutoff))
