"""Hexagon grid construction from the single user parameter b1.

The grid is a triangular lattice of bin centroids: rows are spaced
a2 = sqrt(3)*a1/2 apart and odd rows are offset right by a1/2, so the
nearest-centroid cells are regular hexagons of width a1.  The grid
starts one buffer unit below/left of the data at (s1, s2) = (-q, -q*r2)
and the vertical bin count b2 is the smallest integer whose rows cover
the buffered data range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class GridConfig:
    b1: int
    q: float = 0.1
    r2: float = 1.0

    def __post_init__(self):
        if self.b1 < 2:
            raise ValueError(f"b1 must be >= 2, got {self.b1}")
        if not 0.0 < self.q < 0.5:
            raise ValueError(f"buffer q must be in (0, 0.5), got {self.q}")
        if self.r2 <= 0.0:
            raise ValueError(f"r2 must be positive, got {self.r2}")


@dataclass(frozen=True)
class HexGrid:
    b1: int
    b2: int
    a1: float
    a2: float
    s1: float
    s2: float
    q: float
    r2: float
    centroids2d: np.ndarray  # (b1*b2, 2), row-major bottom-up

    @property
    def b(self) -> int:
        return self.b1 * self.b2

    @property
    def circumradius(self) -> float:
        # farthest a point inside a hexagon can be from its centroid
        return self.a1 / SQRT3


def compute_b2(b1: int, q: float, r2: float) -> int:
    """Vertical bin count: ceil(1 + 2[r2 + q(1+r2)](b1-1) / (sqrt(3)(1+2q)))."""
    GridConfig(b1=b1, q=q, r2=r2)  # validate
    return math.ceil(1.0 + 2.0 * (r2 + q * (1.0 + r2)) * (b1 - 1) / (SQRT3 * (1.0 + 2.0 * q)))


def default_b1(n: int) -> int:
    """Default horizontal bin count, cube-root rule on the sample size."""
    return max(2, math.ceil(n ** (1.0 / 3.0)))


def build_grid(config: GridConfig) -> HexGrid:
    """Construct the centroid lattice covering [0,1] x [0,r2] plus buffer."""
    b1, q, r2 = config.b1, config.q, config.r2
    b2 = compute_b2(b1, q, r2)
    a1 = (1.0 + 2.0 * q) / (b1 - 1)
    a2 = SQRT3 * a1 / 2.0
    s1 = -q
    s2 = -q * r2

    rows = np.arange(b2)
    cols = np.arange(b1)
    x = s1 + cols[None, :] * a1 + (rows[:, None] % 2) * (a1 / 2.0)
    y = s2 + rows[:, None] * a2 + np.zeros_like(cols[None, :], dtype=float)
    centroids = np.stack([x.ravel(), y.ravel()], axis=1)
    return HexGrid(b1=b1, b2=b2, a1=a1, a2=a2, s1=s1, s2=s2, q=q, r2=r2,
                   centroids2d=centroids)
