"""Lift the 2-D wireframe into p-D and optionally drop low-count bins."""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from hexlift.binning import Binning
from hexlift.delaunay import EdgeList, triangulate


@dataclass(frozen=True)
class LiftedModel:
    """Surviving bin centroids in 2-D and p-D plus their Delaunay edges.

    ``bin_ids`` are the surviving grid bin indices, ascending; edge
    endpoints index rows of ``centroids2d``/``centroids_pd``.
    """

    centroids2d: np.ndarray  # (m', 2)
    centroids_pd: np.ndarray  # (m', p)
    edges: EdgeList | None
    bin_ids: np.ndarray  # (m',)
    cutoff: float = 0.0

    @property
    def m(self) -> int:
        return int(self.bin_ids.shape[0])


def _bin_means(data: np.ndarray, assignment: np.ndarray, bin_ids: np.ndarray) -> np.ndarray:
    b = int(assignment.max()) + 1
    sums = np.zeros((b, data.shape[1]))
    np.add.at(sums, assignment, data)
    counts = np.bincount(assignment, minlength=b)
    return sums[bin_ids] / counts[bin_ids, None]


def lift(binning: Binning, data: np.ndarray, centers2d: np.ndarray,
         compute_edges: bool = True) -> LiftedModel:
    """p-D bin means for the occupied bins, wired with Delaunay edges.

    ``centers2d`` must hold the occupied bins' 2-D centers in the order
    of ``binning.occupied``.  ``compute_edges=False`` skips the
    triangulation (tuning sweeps only need the centroids for HBE).
    """
    data = np.asarray(data, dtype=float)
    if binning.m < 1:
        raise ValueError("binning has no occupied bins")
    if data.shape[0] != binning.n:
        raise ValueError(
            f"data has {data.shape[0]} rows but binning covers {binning.n}"
        )
    centers2d = np.asarray(centers2d, dtype=float)
    if centers2d.shape != (binning.m, 2):
        raise ValueError(f"centers2d must be {binning.m} x 2, got {centers2d.shape}")
    centroids_pd = _bin_means(data, binning.assignment, binning.occupied)
    edges = triangulate(centers2d) if compute_edges and binning.m >= 3 else None
    return LiftedModel(centroids2d=centers2d, centroids_pd=centroids_pd,
                       edges=edges, bin_ids=binning.occupied.copy(), cutoff=0.0)


def remove_low_count(model: LiftedModel, binning: Binning, layout_points: np.ndarray,
                     data: np.ndarray, cutoff: float) -> tuple[LiftedModel, Binning]:
    """Drop bins with standardized count w_h <= cutoff (inclusive).

    Orphaned observations are reassigned to the nearest surviving 2-D
    centroid, p-D centroids are recomputed from the updated membership
    and the survivors are re-triangulated.  ``cutoff`` must be below the
    largest w_h so at least one bin survives.
    """
    if cutoff < 0:
        raise ValueError(f"cutoff must be nonnegative, got {cutoff}")
    if cutoff == 0.0:
        return model, binning
    wmax = binning.std_counts.max()
    if cutoff >= wmax:
        raise ValueError(
            f"cutoff {cutoff} would remove every bin (max w_h = {wmax:.6g})"
        )
    data = np.asarray(data, dtype=float)
    layout_points = np.asarray(layout_points, dtype=float)
    keep = binning.std_counts > cutoff
    survivors = binning.occupied[keep]
    surv_centers = model.centroids2d[keep]

    # reassign orphans to the nearest surviving 2-D centroid
    removed = np.zeros(binning.counts.shape[0], dtype=bool)
    removed[binning.occupied[~keep]] = True
    assignment = binning.assignment.copy()
    orphan = removed[assignment]
    if np.any(orphan):
        from hexlift.binning import brute_force_assign

        rows = brute_force_assign(layout_points[orphan], surv_centers)
        assignment[orphan] = survivors[rows]
    new_counts = np.bincount(assignment, minlength=binning.counts.shape[0])
    new_binning = Binning(assignment=assignment, counts=new_counts,
                          occupied=survivors,
                          std_counts=new_counts[survivors] / binning.n)
    centroids_pd = _bin_means(data, assignment, survivors)
    edges = triangulate(surv_centers) if survivors.shape[0] >= 3 else None
    new_model = LiftedModel(centroids2d=surv_centers, centroids_pd=centroids_pd,
                            edges=edges, bin_ids=survivors, cutoff=float(cutoff))
    return new_model, new_binning
