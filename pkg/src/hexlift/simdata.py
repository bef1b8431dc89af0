"""Synthetic benchmark: two separated nonlinear clusters in 7-D (2NC7 style).

Cluster A is a 2-parameter curved sheet and cluster B a 3-parameter
curved solid, both living in the first four variables; variables 5-7 are
pure Gaussian noise.  B is offset along variable 1 so the clusters are
separated by at least ``separation`` in the structural dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

COLUMN_NAMES = tuple(f"x{i}" for i in range(1, 8))


@dataclass(frozen=True)
class SyntheticSpec:
    n_per_cluster: int = 1000
    noise_sd: float = 0.05
    separation: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.n_per_cluster < 10:
            raise ValueError(f"n_per_cluster must be >= 10, got {self.n_per_cluster}")
        if self.noise_sd <= 0:
            raise ValueError(f"noise_sd must be positive, got {self.noise_sd}")
        if self.separation <= 0:
            raise ValueError(f"separation must be positive, got {self.separation}")


def gen_2nc7(spec: SyntheticSpec) -> tuple[np.ndarray, np.ndarray]:
    """Deterministic (2*n_per_cluster, 7) sample plus 0/1 cluster labels."""
    rng = np.random.default_rng(spec.seed)
    n = spec.n_per_cluster

    # cluster A: curved 2-D sheet in x1..x4 (x4 flat)
    u = rng.uniform(-1.0, 1.0, n)
    v = rng.uniform(-1.0, 1.0, n)
    a = np.column_stack([u, v, 0.5 * (u * u - v * v), np.zeros(n)])

    # cluster B: curved 3-D solid, shifted along x1 by separation + 2
    # (parameter boxes span 2, so the x1 gap between clusters is
    # exactly `separation`)
    u = rng.uniform(-1.0, 1.0, n)
    v = rng.uniform(-1.0, 1.0, n)
    w = rng.uniform(-1.0, 1.0, n)
    b = np.column_stack([
        2.0 + spec.separation + u,
        v,
        w,
        0.4 * (u * u + v * v + w * w),
    ])

    structure = np.vstack([a, b])
    noise = rng.normal(0.0, spec.noise_sd, (2 * n, 3))
    data = np.hstack([structure, noise])
    labels = np.repeat([0, 1], n)
    return data, labels


def true_layout(data: np.ndarray) -> np.ndarray:
    """The generator's own 2-D coordinates: the first two variables."""
    return np.asarray(data, dtype=float)[:, :2].copy()
