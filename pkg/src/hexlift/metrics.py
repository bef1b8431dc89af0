"""Auxiliary layout-quality metrics and the cross-layout comparison table.

Random-triplet accuracy (RTA) and the Shepard-diagram Spearman
correlation (SC) score distance-order preservation between the p-D data
and the 2-D layout.  For side-by-side comparison with HBE they are
reversed (1 - value) so that lower is better in every column, then
min-max normalized across layouts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.spatial.distance import pdist
from scipy.stats import rankdata, spearmanr

from hexlift.scaling import RawLayout, ScaledLayout, scale_layout

#: fixed column order of the comparison table (all lower-is-better)
TABLE_COLUMNS = ("hbe", "r_rta", "r_sc")


def random_triplet_accuracy(data: np.ndarray, layout: ScaledLayout,
                            n_triplets: int | None = None, seed: int = 0) -> float:
    """Fraction of random triplets (i; j, k) whose p-D and 2-D distance
    orders agree.  Sampling: uniform anchor i, then uniform distinct j, k.
    """
    data = np.asarray(data, dtype=float)
    pts = layout.points
    n = data.shape[0]
    if n < 3:
        raise ValueError("need at least 3 observations")
    if n_triplets is None:
        n_triplets = 10 * n
    if n_triplets < 1:
        raise ValueError("n_triplets must be >= 1")
    rng = np.random.default_rng(seed)
    i = rng.integers(n, size=n_triplets)
    j = rng.integers(n - 1, size=n_triplets)
    j += j >= i
    k = rng.integers(n - 2, size=n_triplets)
    lo, hi = np.minimum(i, j), np.maximum(i, j)
    k += k >= lo
    k += k >= hi
    dp_ij = ((data[i] - data[j]) ** 2).sum(axis=1)
    dp_ik = ((data[i] - data[k]) ** 2).sum(axis=1)
    d2_ij = ((pts[i] - pts[j]) ** 2).sum(axis=1)
    d2_ik = ((pts[i] - pts[k]) ** 2).sum(axis=1)
    agree = np.sign(dp_ij - dp_ik) == np.sign(d2_ij - d2_ik)
    return float(np.count_nonzero(agree) / n_triplets)


def exhaustive_triplet_accuracy(data: np.ndarray, layout: ScaledLayout) -> float:
    """All-triplets oracle for RTA; O(n^3), test-scale n only."""
    data = np.asarray(data, dtype=float)
    pts = layout.points
    n = data.shape[0]
    dp = ((data[:, None, :] - data[None, :, :]) ** 2).sum(axis=2)
    d2 = ((pts[:, None, :] - pts[None, :, :]) ** 2).sum(axis=2)
    agree = 0
    total = 0
    for i in range(n):
        others = [j for j in range(n) if j != i]
        for a in range(len(others)):
            for b_ in range(a + 1, len(others)):
                j, k = others[a], others[b_]
                agree += np.sign(dp[i, j] - dp[i, k]) == np.sign(d2[i, j] - d2[i, k])
                total += 1
    return agree / total


def shepard_spearman(data: np.ndarray, layout: ScaledLayout,
                     max_pairs: int = 1_000_000, seed: int = 0) -> float:
    """Spearman rank correlation between p-D and 2-D pairwise distances.

    Uses every pair when n(n-1)/2 <= max_pairs, otherwise a seeded
    sample of that many pairs.
    """
    data = np.asarray(data, dtype=float)
    pts = layout.points
    n = data.shape[0]
    if n < 3:
        raise ValueError("need at least 3 observations")
    total_pairs = n * (n - 1) // 2
    if total_pairs <= max_pairs:
        dp = pdist(data)
        d2 = pdist(pts)
    else:
        rng = np.random.default_rng(seed)
        i = rng.integers(n, size=max_pairs)
        j = rng.integers(n - 1, size=max_pairs)
        j += j >= i
        dp = np.sqrt(((data[i] - data[j]) ** 2).sum(axis=1))
        d2 = np.sqrt(((pts[i] - pts[j]) ** 2).sum(axis=1))
    if np.ptp(dp) == 0.0 or np.ptp(d2) == 0.0:
        raise ValueError("distance vector has zero variance")
    rp = rankdata(dp)
    r2 = rankdata(d2)
    # identical / exactly reversed rank vectors: return the exact limit
    if np.array_equal(rp, r2):
        return 1.0
    if np.array_equal(rp + r2, np.full_like(rp, len(rp) + 1.0)):
        return -1.0
    rho = spearmanr(dp, d2).statistic
    return float(rho)


@dataclass(frozen=True)
class MetricTable:
    """Per-layout scores, raw and min-max normalized (lower = better)."""

    layout_ids: tuple[str, ...]
    hbe: np.ndarray
    rta: np.ndarray
    sc: np.ndarray
    r_rta: np.ndarray
    r_sc: np.ndarray
    normalized: dict[str, np.ndarray] = field(default_factory=dict)
    normalization: dict[str, tuple[float, float]] = field(default_factory=dict)
    reference_a1: float = 0.0

    def column(self, name: str) -> np.ndarray:
        return getattr(self, name)


def _minmax(values: np.ndarray) -> tuple[np.ndarray, tuple[float, float]]:
    lo, hi = float(values.min()), float(values.max())
    if hi == lo:
        return np.zeros_like(values), (lo, hi)
    return (values - lo) / (hi - lo), (lo, hi)


def build_metric_table(layouts: list[RawLayout], data: np.ndarray,
                       reference_a1: float, q: float = 0.1,
                       n_triplets: int | None = None, seed: int = 0) -> MetricTable:
    """HBE (full pipeline at the binwidth closest to ``reference_a1``),
    RTA and SC per layout, reversed and min-max normalized across layouts.
    """
    from hexlift.pipeline import fit_layout

    if len(layouts) < 2:
        raise ValueError("metric table needs at least 2 layouts")
    data = np.asarray(data, dtype=float)
    b1 = max(2, round(1.0 + (1.0 + 2.0 * q) / reference_a1))
    ids, hbe, rta, sc = [], [], [], []
    for raw in layouts:
        scaled = scale_layout(raw, preserve_ratio=True)
        fit = fit_layout(data, scaled, b1=b1, q=q, cutoff=0.0, compute_edges=False)
        ids.append(raw.layout_id)
        hbe.append(fit.residuals.hbe)
        rta.append(random_triplet_accuracy(data, scaled, n_triplets, seed))
        sc.append(shepard_spearman(data, scaled, seed=seed))
    hbe = np.asarray(hbe)
    rta = np.asarray(rta)
    sc = np.asarray(sc)
    r_rta = 1.0 - rta
    r_sc = 1.0 - sc
    normalized: dict[str, np.ndarray] = {}
    normalization: dict[str, tuple[float, float]] = {}
    for name, col in zip(TABLE_COLUMNS, (hbe, r_rta, r_sc)):
        normalized[name], normalization[name] = _minmax(col)
    return MetricTable(layout_ids=tuple(ids), hbe=hbe, rta=rta, sc=sc,
                       r_rta=r_rta, r_sc=r_sc, normalized=normalized,
                       normalization=normalization, reference_a1=reference_a1)
