"""Normalize a raw NLDR layout to the standard range [0,1] x [0,r2]."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class RawLayout:
    """An n x 2 layout as emitted by an NLDR method, in arbitrary units."""

    points: np.ndarray
    layout_id: str = "layout"

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise ValueError(f"layout must be n x 2, got shape {pts.shape}")
        if pts.shape[0] < 3:
            raise ValueError(f"layout needs at least 3 points, got {pts.shape[0]}")
        if not np.all(np.isfinite(pts)):
            raise ValueError("layout contains non-finite coordinates")
        for col in range(2):
            if np.unique(pts[:, col]).size < 2:
                raise ValueError(f"layout column {col} is constant")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True)
class ScaledLayout:
    """Layout with column 1 spanning [0, 1] and column 2 spanning [0, r2].

    When the raw layout's second axis had the larger range the axes are
    swapped before scaling (recorded in ``axes_swapped``) so r2 <= 1.
    """

    points: np.ndarray
    r2: float
    preserve_ratio: bool
    layout_id: str = "layout"
    axes_swapped: bool = False

    @property
    def n(self) -> int:
        return self.points.shape[0]


def scale_layout(raw: RawLayout, preserve_ratio: bool = True) -> ScaledLayout:
    """Affinely rescale each axis so the layout spans [0,1] x [0,r2].

    With ``preserve_ratio`` the relative axis ranges are kept
    (r2 = range2/range1 after ordering the wider axis first); otherwise
    both axes are scaled to [0,1] and r2 = 1.
    """
    pts = raw.points
    mins = pts.min(axis=0)
    ranges = pts.max(axis=0) - mins
    for col in range(2):
        if ranges[col] == 0.0:
            raise ValueError(f"layout column {col} has zero range")

    swapped = False
    if preserve_ratio and ranges[1] > ranges[0]:
        pts = pts[:, ::-1]
        mins = mins[::-1]
        ranges = ranges[::-1]
        swapped = True

    if preserve_ratio:
        scaled = (pts - mins) / ranges[0]
        r2 = ranges[1] / ranges[0]
    else:
        scaled = (pts - mins) / ranges
        r2 = 1.0
    return ScaledLayout(
        points=scaled,
        r2=float(r2),
        preserve_ratio=preserve_ratio,
        layout_id=raw.layout_id,
        axes_swapped=swapped,
    )
