import numpy as np
import pytest
from scipy.spatial.distance import pdist

from hexlift import (
    GridConfig,
    assign_bins,
    bin_centers_2d,
    build_grid,
    lift,
    predict_2d,
    residuals,
)
from hexlift.binning import Binning
from hexlift.scaling import ScaledLayout


def fitted(data, pts, b1=8):
    layout = ScaledLayout(points=pts, r2=1.0, preserve_ratio=True)
    grid = build_grid(GridConfig(b1=b1, q=0.1))
    binning = assign_bins(layout, grid)
    centers = bin_centers_2d(binning, grid)
    model = lift(binning, data, centers, compute_edges=False)
    return binning, model


def triple_sum_hbe(data, model, binning):
    """Direct evaluation of the triple sum over bins, members, dimensions."""
    total = 0.0
    for row, bin_id in enumerate(model.bin_ids):
        members = data[binning.assignment == bin_id]
        total += ((members - model.centroids_pd[row]) ** 2).sum()
    return np.sqrt(total / len(data))


def test_singletons_zero_hbe():
    rng = np.random.default_rng(0)
    data = rng.random((10, 5))
    grid = build_grid(GridConfig(b1=12, q=0.1))
    # pick far-apart centroids so each point lands alone
    ids = np.arange(10) * 17 % grid.b
    ids = np.unique(ids)[:10]
    assignment = ids[np.arange(len(ids)) % len(ids)]
    data = data[: len(ids)]
    counts = np.bincount(assignment, minlength=grid.b)
    binning = Binning(assignment=assignment, counts=counts, occupied=np.sort(ids),
                      std_counts=counts[np.sort(ids)] / len(ids))
    model = lift(binning, data, grid.centroids2d[np.sort(ids)], compute_edges=False)
    res = residuals(data, model, binning)
    assert np.all(res.e <= 1e-12)
    assert res.hbe <= 1e-12


def test_single_bin_closed_form():
    rng = np.random.default_rng(1)
    data = rng.normal(size=(40, 6))
    grid = build_grid(GridConfig(b1=8, q=0.1))
    assignment = np.full(40, 10)
    counts = np.bincount(assignment, minlength=grid.b)
    binning = Binning(assignment=assignment, counts=counts, occupied=np.array([10]),
                      std_counts=np.array([1.0]))
    model = lift(binning, data, grid.centroids2d[[10]], compute_edges=False)
    res = residuals(data, model, binning)
    expect = np.sqrt(np.mean(((data - data.mean(axis=0)) ** 2).sum(axis=1)))
    assert res.hbe == pytest.approx(expect, rel=1e-10)


def test_triple_sum_agreement():
    rng = np.random.default_rng(2)
    data = rng.normal(size=(300, 7))
    pts = rng.random((300, 2))
    binning, model = fitted(data, pts)
    res = residuals(data, model, binning)
    assert res.hbe == pytest.approx(triple_sum_hbe(data, model, binning), abs=1e-12)


def test_duplication_invariance():
    rng = np.random.default_rng(3)
    data = rng.normal(size=(120, 4))
    pts = rng.random((120, 2))
    binning, model = fitted(data, pts)
    res = residuals(data, model, binning)

    data2 = np.repeat(data, 2, axis=0)
    pts2 = np.repeat(pts, 2, axis=0)
    binning2, model2 = fitted(data2, pts2)
    res2 = residuals(data2, model2, binning2)
    assert res2.hbe == pytest.approx(res.hbe, rel=1e-12)


def test_rotation_invariance():
    rng = np.random.default_rng(4)
    data = rng.normal(size=(200, 5))
    pts = rng.random((200, 2))
    binning, model = fitted(data, pts)
    hbe = residuals(data, model, binning).hbe

    rot, _ = np.linalg.qr(rng.normal(size=(5, 5)))
    binning_r, model_r = fitted(data @ rot, pts)
    hbe_r = residuals(data @ rot, model_r, binning_r).hbe
    assert hbe_r == pytest.approx(hbe, rel=1e-9)


def test_refinement_never_increases_hbe():
    # splitting each bin strictly reduces within-bin scatter
    rng = np.random.default_rng(5)
    data = rng.normal(size=(240, 4))
    pts = rng.random((240, 2))
    layout = ScaledLayout(points=pts, r2=1.0, preserve_ratio=True)
    coarse_grid = build_grid(GridConfig(b1=4, q=0.1))
    fine_grid = build_grid(GridConfig(b1=16, q=0.1))
    hbes = []
    for grid in (coarse_grid, fine_grid):
        binning = assign_bins(layout, grid)
        model = lift(binning, data, bin_centers_2d(binning, grid), compute_edges=False)
        hbes.append(residuals(data, model, binning).hbe)
    # per-bin mean minimizes squared error, so a nested refinement cannot
    # increase HBE; hex grids at different b1 are not exactly nested, so
    # build an explicitly nested partition instead
    assignment = assign_bins(layout, coarse_grid).assignment
    sub = assignment * 2 + (pts[:, 0] > 0.5)
    coarse_hbe = _partition_hbe(data, assignment)
    nested_hbe = _partition_hbe(data, sub)
    assert nested_hbe <= coarse_hbe + 1e-12


def _partition_hbe(data, groups):
    total = 0.0
    for g in np.unique(groups):
        members = data[groups == g]
        total += ((members - members.mean(axis=0)) ** 2).sum()
    return np.sqrt(total / len(data))


def test_predict_returns_known_centroid():
    rng = np.random.default_rng(6)
    data = rng.normal(size=(150, 6))
    pts = rng.random((150, 2))
    binning, model = fitted(data, pts)
    for row in [0, model.m // 2, model.m - 1]:
        pred = predict_2d(model.centroids_pd[row], model)
        assert np.array_equal(pred, model.centroids2d[row])


def test_predict_codomain():
    rng = np.random.default_rng(7)
    data = rng.normal(size=(100, 5))
    pts = rng.random((100, 2))
    binning, model = fitted(data, pts)
    queries = rng.normal(size=(1000, 5))
    preds = predict_2d(queries, model)
    centroid_set = {tuple(c) for c in model.centroids2d}
    assert all(tuple(p) in centroid_set for p in preds)


def test_predict_training_points_with_small_residual():
    rng = np.random.default_rng(8)
    data = rng.normal(size=(200, 6))
    pts = rng.random((200, 2))
    binning, model = fitted(data, pts)
    res = residuals(data, model, binning)
    gap = pdist(model.centroids_pd).min()
    close = res.e < gap / 2
    assert close.any()
    preds = predict_2d(data[close], model)
    row_of_bin = {int(b): i for i, b in enumerate(model.bin_ids)}
    expect_rows = [row_of_bin[int(b)] for b in binning.assignment[close]]
    assert np.array_equal(preds, model.centroids2d[expect_rows])


def test_predict_rejects_nonfinite():
    rng = np.random.default_rng(9)
    data = rng.normal(size=(50, 4))
    pts = rng.random((50, 2))
    _, model = fitted(data, pts)
    with pytest.raises(ValueError, match="finite"):
        predict_2d(np.array([np.nan, 0, 0, 0]), model)
