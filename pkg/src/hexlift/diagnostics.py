"""Residuals, hexbin error and 2-D prediction for new observations."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from hexlift.binning import Binning
from hexlift.lift import LiftedModel


@dataclass(frozen=True)
class ResidualSet:
    """Per-observation p-D distance to the bin centroid, and its RMS."""

    e: np.ndarray  # (n,)
    hbe: float


def residuals(data: np.ndarray, model: LiftedModel, binning: Binning) -> ResidualSet:
    """Distance of each observation from its bin's p-D centroid.

    HBE is the root mean square of these residuals over all n
    observations (bin removal reassigns points, so all contribute).
    """
    data = np.asarray(data, dtype=float)
    if data.shape[0] != binning.n:
        raise ValueError(
            f"data has {data.shape[0]} rows but binning covers {binning.n}"
        )
    if data.shape[1] != model.centroids_pd.shape[1]:
        raise ValueError(
            f"data has p={data.shape[1]} but model centroids have "
            f"p={model.centroids_pd.shape[1]}"
        )
    row_of_bin = np.full(binning.counts.shape[0], -1)
    row_of_bin[model.bin_ids] = np.arange(model.m)
    rows = row_of_bin[binning.assignment]
    if np.any(rows < 0):
        bad = int(np.flatnonzero(rows < 0)[0])
        raise ValueError(f"observation {bad} is assigned to a bin not in the model")
    diff = data - model.centroids_pd[rows]
    e = np.sqrt(np.einsum("ij,ij->i", diff, diff))
    hbe = float(np.sqrt(np.mean(e * e)))
    return ResidualSet(e=e, hbe=hbe)


def predict_2d(x_new: np.ndarray, model: LiftedModel) -> np.ndarray:
    """Layout position of new observations: the 2-D centroid of the
    p-D-nearest bin (ties broken by lowest bin id).

    Accepts a single length-p vector or an (n, p) matrix.
    """
    x = np.asarray(x_new, dtype=float)
    single = x.ndim == 1
    if single:
        x = x[None, :]
    if not np.all(np.isfinite(x)):
        raise ValueError("prediction input contains non-finite values")
    if x.shape[1] != model.centroids_pd.shape[1]:
        raise ValueError(
            f"input has p={x.shape[1]} but model centroids have "
            f"p={model.centroids_pd.shape[1]}"
        )
    d2 = ((x[:, None, :] - model.centroids_pd[None, :, :]) ** 2).sum(axis=2)
    rows = np.argmin(d2, axis=1)  # first minimum = lowest bin id (ids ascending)
    out = model.centroids2d[rows]
    return out[0] if single else out
