"""Orthonormal 2-D projection bases and geodesic tour paths."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

ORTHO_TOL = 1e-9


@dataclass(frozen=True)
class ProjectionBasis:
    """p x 2 matrix with orthonormal columns."""

    basis: np.ndarray
    seed: int | None = None

    def __post_init__(self):
        basis = np.asarray(self.basis, dtype=float)
        if basis.ndim != 2 or basis.shape[1] != 2 or basis.shape[0] < 2:
            raise ValueError(f"basis must be p x 2 with p >= 2, got {basis.shape}")
        object.__setattr__(self, "basis", basis)

    @property
    def p(self) -> int:
        return self.basis.shape[0]

    def orthonormality_residual(self) -> float:
        g = self.basis.T @ self.basis
        return float(np.abs(g - np.eye(2)).max())


@dataclass(frozen=True)
class TourPath:
    frames: tuple[ProjectionBasis, ...]
    steps_per_segment: int


def random_basis(p: int, seed: int = 0) -> ProjectionBasis:
    """Orthonormalized pair of random directions, deterministic per seed."""
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    rng = np.random.default_rng(seed)
    m = rng.standard_normal((p, 2))
    q, r = np.linalg.qr(m)
    q = q * np.sign(np.diag(r))  # sign-fix so the result is unique
    return ProjectionBasis(basis=q, seed=seed)


def geodesic_path(start: ProjectionBasis, end: ProjectionBasis, steps: int) -> TourPath:
    """Uniform-speed interpolation along the geodesic between the two
    spanned planes.  Returns steps+1 frames; endpoints span the same
    planes as the inputs (within-plane spin is not controlled).
    """
    if start.p != end.p:
        raise ValueError(f"basis dimensions differ: {start.p} vs {end.p}")
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    a = start.basis
    b = end.basis
    u, s, vt = np.linalg.svd(a.T @ b)
    s = np.clip(s, -1.0, 1.0)
    theta = np.arccos(s)
    pa = a @ u  # principal directions in the start plane
    pb = b @ vt.T  # matched directions in the end plane
    # orthogonal complement directions; undefined where the planes share
    # a principal direction (theta ~ 0), in which case the direction is fixed
    g = np.zeros_like(pa)
    for i in range(2):
        if np.sin(theta[i]) > 1e-9:
            g[:, i] = (pb[:, i] - s[i] * pa[:, i]) / np.sin(theta[i])
    frames = []
    for k in range(steps + 1):
        t = k / steps
        f = pa * np.cos(t * theta) + g * np.sin(t * theta)
        frames.append(ProjectionBasis(basis=f))
    return TourPath(frames=tuple(frames), steps_per_segment=steps)


def tour_frames(p: int, n_bases: int = 3, steps: int = 1, seed: int = 0) -> TourPath:
    """Chain of seeded random bases for export; the UI interpolates
    between consecutive frames client-side."""
    bases = [random_basis(p, seed + i) for i in range(max(2, n_bases))]
    frames: list[ProjectionBasis] = []
    for a, b in zip(bases, bases[1:]):
        seg = geodesic_path(a, b, steps).frames
        frames.extend(seg[:-1])
    frames.append(bases[-1])
    return TourPath(frames=tuple(frames), steps_per_segment=steps)


def project(data_or_model: np.ndarray, basis: ProjectionBasis) -> np.ndarray:
    """Project rows of an (n, p) matrix onto the basis plane."""
    m = np.asarray(data_or_model, dtype=float)
    if m.ndim != 2 or m.shape[1] != basis.p:
        raise ValueError(
            f"matrix with {m.shape[1] if m.ndim == 2 else '?'} columns cannot be "
            f"projected with a p={basis.p} basis"
        )
    return m @ basis.basis


def principal_angles(a: ProjectionBasis, b: ProjectionBasis) -> np.ndarray:
    """Principal angles between the two spanned planes (radians)."""
    s = np.linalg.svd(a.basis.T @ b.basis, compute_uv=False)
    return np.arccos(np.clip(s, -1.0, 1.0))
