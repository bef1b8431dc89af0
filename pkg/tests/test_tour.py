import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexlift import (
    ProjectionBasis,
    geodesic_path,
    principal_angles,
    project,
    random_basis,
    tour_frames,
)


def test_random_basis_orthonormal_and_seeded():
    for p in (2, 3, 7, 20):
        basis = random_basis(p, seed=3)
        assert basis.basis.shape == (p, 2)
        assert basis.orthonormality_residual() < 1e-9
    a = random_basis(7, seed=5).basis
    b = random_basis(7, seed=5).basis
    c = random_basis(7, seed=6).basis
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_basis_validation():
    with pytest.raises(ValueError, match="p x 2"):
        ProjectionBasis(np.zeros((3, 3)))
    with pytest.raises(ValueError, match=">= 2"):
        random_basis(1)


def test_geodesic_endpoints_span_input_planes():
    start = random_basis(6, seed=0)
    end = random_basis(6, seed=1)
    path = geodesic_path(start, end, steps=10)
    assert len(path.frames) == 11
    assert principal_angles(path.frames[0], start).max() < 1e-6
    assert principal_angles(path.frames[-1], end).max() < 1e-6


def test_geodesic_frames_orthonormal():
    path = geodesic_path(random_basis(9, seed=2), random_basis(9, seed=3), steps=25)
    for frame in path.frames:
        assert frame.orthonormality_residual() < 1e-9


def test_geodesic_uniform_speed():
    start = random_basis(5, seed=4)
    end = random_basis(5, seed=5)
    path = geodesic_path(start, end, steps=20)
    total = principal_angles(start, end)
    for k, frame in enumerate(path.frames):
        expect = total * (k / 20)
        assert principal_angles(start, frame) == pytest.approx(expect, abs=1e-6)


def test_geodesic_identity_plane():
    basis = random_basis(4, seed=6)
    path = geodesic_path(basis, basis, steps=5)
    for frame in path.frames:
        assert principal_angles(frame, basis).max() < 1e-6


def test_tour_frames_chain():
    path = tour_frames(7, n_bases=3, steps=4, seed=0)
    # 2 segments of 4 steps each, sharing interior endpoints: 9 frames
    assert len(path.frames) == 9
    for frame in path.frames:
        assert frame.orthonormality_residual() < 1e-9
    assert principal_angles(path.frames[0], random_basis(7, seed=0)).max() < 1e-6
    assert principal_angles(path.frames[-1], random_basis(7, seed=2)).max() < 1e-6


def test_project_shapes_and_values():
    rng = np.random.default_rng(7)
    data = rng.normal(size=(40, 5))
    basis = random_basis(5, seed=8)
    proj = project(data, basis)
    assert proj.shape == (40, 2)
    assert np.allclose(proj, data @ basis.basis)
    with pytest.raises(ValueError, match="projected"):
        project(rng.normal(size=(10, 4)), basis)


def test_projection_preserves_in_plane_distances():
    rng = np.random.default_rng(9)
    basis = random_basis(8, seed=10)
    coords = rng.normal(size=(30, 2))
    data = coords @ basis.basis.T  # points living exactly in the plane
    proj = project(data, basis)
    d0 = np.linalg.norm(coords[:, None] - coords[None, :], axis=2)
    d1 = np.linalg.norm(proj[:, None] - proj[None, :], axis=2)
    assert np.allclose(d0, d1, atol=1e-9)


@settings(max_examples=25, deadline=None)
@given(p=st.integers(2, 12), s0=st.integers(0, 50), s1=st.integers(51, 100),
       steps=st.integers(1, 15))
def test_geodesic_always_orthonormal(p, s0, s1, steps):
    path = geodesic_path(random_basis(p, seed=s0), random_basis(p, seed=s1), steps)
    assert len(path.frames) == steps + 1
    for frame in path.frames:
        assert frame.orthonormality_residual() < 1e-6
