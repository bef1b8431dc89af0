import numpy as np
import pytest

from hexlift import GridConfig, build_grid, triangulate
from hexlift.delaunay import brute_force_delaunay


def circumcircle_residuals(pts, triangles):
    """Largest signed penetration of any point into any circumcircle."""
    worst = -np.inf
    for i, j, k in triangles:
        a, b, c = pts[i], pts[j], pts[k]
        d = 2.0 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
        ux = ((a @ a) * (b[1] - c[1]) + (b @ b) * (c[1] - a[1]) + (c @ c) * (a[1] - b[1])) / d
        uy = ((a @ a) * (c[0] - b[0]) + (b @ b) * (a[0] - c[0]) + (c @ c) * (b[0] - a[0])) / d
        center = np.array([ux, uy])
        r = np.linalg.norm(a - center)
        dist = np.linalg.norm(pts - center, axis=1)
        dist[[i, j, k]] = np.inf
        worst = max(worst, float((r - dist).max()))
    return worst


def test_simplex():
    el = triangulate(np.array([[0.0, 0.0], [1.0, 0.0], [0.5, 1.0]]))
    assert el.triangles == ((0, 1, 2),)
    assert len(el.edges) == 3


def test_square_cocircular():
    el = triangulate(np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]))
    assert len(el.triangles) == 2
    assert len(el.edges) == 5
    # the kept diagonal is still empty-circumcircle (boundary points allowed)
    pts = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
    assert circumcircle_residuals(pts, el.triangles) <= 1e-9


def test_too_few_points():
    with pytest.raises(ValueError, match="at least 3"):
        triangulate(np.array([[0.0, 0.0], [1.0, 1.0]]))


def test_duplicates_rejected():
    with pytest.raises(ValueError, match="duplicate"):
        triangulate(np.array([[0.0, 0.0], [0.0, 0.0], [1.0, 1.0]]))


def test_collinear_degenerates_to_path():
    el = triangulate(np.array([[3.0, 3.0], [0.0, 0.0], [2.0, 2.0], [1.0, 1.0]]))
    assert el.collinear
    assert el.triangles == ()
    assert el.edges == frozenset({(0, 2), (2, 3), (1, 3)})


def test_matches_brute_force():
    for seed in range(50):
        rng = np.random.default_rng(seed)
        m = int(rng.integers(4, 51))
        pts = rng.random((m, 2))
        el = triangulate(pts)
        assert set(el.triangles) == brute_force_delaunay(pts), f"seed {seed}"


def test_euler_relations():
    for seed in range(10):
        rng = np.random.default_rng(1000 + seed)
        m = int(rng.integers(5, 300))
        pts = rng.random((m, 2))
        el = triangulate(pts)
        h = el.hull_size
        assert len(el.edges) == 3 * m - 3 - h
        assert len(el.triangles) == 2 * m - 2 - h


def test_translation_scale_invariance():
    rng = np.random.default_rng(17)
    pts = rng.random((60, 2))
    base = triangulate(pts)
    moved = triangulate(pts * 7.5 + np.array([123.0, -45.0]))
    assert set(base.triangles) == set(moved.triangles)
    assert base.edges == moved.edges


def test_hex_lattice_is_valid_and_empty_circle():
    # maximally cocircular input; exact predicates must stay deterministic
    grid = build_grid(GridConfig(b1=12, q=0.1, r2=0.7))
    pts = grid.centroids2d
    el = triangulate(pts)
    el2 = triangulate(pts)
    assert el.triangles == el2.triangles
    m = len(pts)
    h = el.hull_size
    assert len(el.edges) == 3 * m - 3 - h
    assert len(el.triangles) == 2 * m - 2 - h
    assert circumcircle_residuals(pts, el.triangles) <= 1e-9
