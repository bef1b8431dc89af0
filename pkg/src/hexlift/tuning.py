"""Parameter sweeps over b1 (hence binwidth a1) and the removal cutoff."""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict

import numpy as np

from hexlift.pipeline import fit_layout
from hexlift.scaling import ScaledLayout

DEFAULT_CUTOFFS = (0.0, 0.001, 0.002, 0.005, 0.01)


@dataclass(frozen=True)
class TuningRecord:
    layout_id: str
    b1: int
    b2: int
    b: int
    m: int
    a1: float
    mean_count: float  # n-bar = n/m
    mean_std_count: float  # w-bar = 1/m
    nonempty_frac: float  # m/b
    cutoff: float
    hbe: float

    def as_dict(self) -> dict:
        return asdict(self)


FIELDS = tuple(TuningRecord.__dataclass_fields__)


def max_b1(n: int, r2: float) -> int:
    """Upper end of the recommended b1 range, sqrt(n/r2)."""
    return math.ceil(math.sqrt(n / r2))


def default_b1_grid(n: int, r2: float, size: int = 12) -> list[int]:
    """Log-spaced b1 values across [2, ceil(sqrt(n/r2))], deduplicated."""
    hi = max_b1(n, r2)
    if hi <= 2:
        return [2]
    vals = np.unique(np.round(np.geomspace(2, hi, size)).astype(int))
    return [int(v) for v in vals]


def _one_record(data, layout: ScaledLayout, b1: int, q: float, cutoff: float) -> TuningRecord:
    fit = fit_layout(data, layout, b1=b1, q=q, cutoff=cutoff, compute_edges=False)
    m = fit.model.m
    b = fit.grid.b
    return TuningRecord(
        layout_id=layout.layout_id,
        b1=fit.grid.b1,
        b2=fit.grid.b2,
        b=b,
        m=m,
        a1=fit.grid.a1,
        mean_count=layout.n / m,
        mean_std_count=1.0 / m,
        nonempty_frac=m / b,
        cutoff=float(cutoff),
        hbe=fit.residuals.hbe,
    )


def _check_b1_range(b1_values, n: int, r2: float) -> None:
    hi = max_b1(n, r2)
    bad = [b1 for b1 in b1_values if not 2 <= b1 <= hi]
    if bad:
        raise ValueError(f"b1 values out of range [2, {hi}]: {bad}")


def sweep_b1(data: np.ndarray, layout: ScaledLayout, b1_values: list[int] | None = None,
             cutoff: float = 0.0, q: float = 0.1) -> list[TuningRecord]:
    """One full-pipeline record per b1, sorted by binwidth a1."""
    data = np.asarray(data, dtype=float)
    if b1_values is None:
        b1_values = default_b1_grid(layout.n, layout.r2)
    _check_b1_range(b1_values, layout.n, layout.r2)
    records = [_one_record(data, layout, b1, q, cutoff) for b1 in sorted(set(b1_values))]
    records.sort(key=lambda r: r.a1)
    return records


def sweep_cutoff(data: np.ndarray, layout: ScaledLayout,
                 b1_values: list[int] | None = None,
                 cutoff_values: tuple[float, ...] = DEFAULT_CUTOFFS,
                 q: float = 0.1) -> list[TuningRecord]:
    """Cartesian product of b1 x cutoff records (ascending cutoffs)."""
    data = np.asarray(data, dtype=float)
    if b1_values is None:
        b1_values = default_b1_grid(layout.n, layout.r2)
    _check_b1_range(b1_values, layout.n, layout.r2)
    cutoffs = sorted(cutoff_values)
    records = []
    for b1 in sorted(set(b1_values)):
        for cutoff in cutoffs:
            records.append(_one_record(data, layout, b1, q, cutoff))
    return records
