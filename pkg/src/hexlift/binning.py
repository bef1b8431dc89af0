"""Nearest-centroid assignment of layout points to hexagon bins."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from hexlift.hexgrid import HexGrid
from hexlift.scaling import ScaledLayout


@dataclass(frozen=True)
class Binning:
    """Per-point bin assignment plus bin occupancy statistics.

    Bin indices are 0-based positions in the grid's centroid lattice.
    ``occupied`` lists the m bins with at least one member, ascending;
    ``std_counts`` holds w_h = n_h/n for those bins.
    """

    assignment: np.ndarray  # (n,) int
    counts: np.ndarray  # (b,) int
    occupied: np.ndarray  # (m,) int, sorted
    std_counts: np.ndarray  # (m,) float

    @property
    def n(self) -> int:
        return int(self.assignment.shape[0])

    @property
    def m(self) -> int:
        return int(self.occupied.shape[0])


def _nearest_centroids(points: np.ndarray, centroids: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Lowest-index nearest centroid per point, using a KD-tree for candidates.

    Squared distances for the candidate set are recomputed with the same
    expression the brute-force oracle uses, so ties resolve identically
    (lowest bin index wins).
    """
    b = centroids.shape[0]
    k = min(8, b)
    tree = cKDTree(centroids)
    _, idx = tree.query(points, k=k)
    if k == 1:
        idx = idx[:, None]
    dx = points[:, 0:1] - centroids[idx, 0]
    dy = points[:, 1:2] - centroids[idx, 1]
    d2 = dx * dx + dy * dy
    dmin = d2.min(axis=1)
    candidates = np.where(d2 == dmin[:, None], idx, b)
    return candidates.min(axis=1), dmin


def assign_bins(layout: ScaledLayout, grid: HexGrid) -> Binning:
    """Map each point to its nearest hexagon centroid (ties: lowest index)."""
    points = layout.points
    assignment, dmin = _nearest_centroids(points, grid.centroids2d)
    limit = grid.circumradius * (1.0 + 1e-9)
    outside = dmin > limit * limit
    if np.any(outside):
        row = int(np.flatnonzero(outside)[0])
        raise ValueError(
            f"point at row {row} lies outside the grid coverage "
            f"(distance {np.sqrt(dmin[row]):.6g} > hexagon circumradius {limit:.6g})"
        )
    counts = np.bincount(assignment, minlength=grid.b)
    occupied = np.flatnonzero(counts)
    std_counts = counts[occupied] / points.shape[0]
    return Binning(assignment=assignment, counts=counts, occupied=occupied,
                   std_counts=std_counts)


def brute_force_assign(points: np.ndarray, centroids: np.ndarray) -> np.ndarray:
    """O(n*b) reference assignment; first (lowest) index wins on ties."""
    dx = points[:, 0:1] - centroids[None, :, 0]
    dy = points[:, 1:2] - centroids[None, :, 1]
    return np.argmin(dx * dx + dy * dy, axis=1)


def bin_centers_2d(binning: Binning, grid: HexGrid, layout: ScaledLayout | None = None,
                   mode: str = "lattice") -> np.ndarray:
    """2-D centers of the occupied bins.

    ``lattice`` (default) returns the hexagon lattice centroids;
    ``member_mean`` returns the mean of each bin's member points and
    needs the layout the binning was computed from.
    """
    if binning.m < 1:
        raise ValueError("binning has no occupied bins")
    if mode == "lattice":
        return grid.centroids2d[binning.occupied]
    if mode == "member_mean":
        if layout is None:
            raise ValueError("member_mean mode requires the layout")
        sums = np.zeros((grid.b, 2))
        np.add.at(sums, binning.assignment, layout.points)
        return sums[binning.occupied] / binning.counts[binning.occupied, None]
    raise ValueError(f"unknown center mode {mode!r}")
