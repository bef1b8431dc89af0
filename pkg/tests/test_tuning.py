import numpy as np
import pytest
from scipy.stats import spearmanr

from hexlift import (
    DEFAULT_CUTOFFS,
    RawLayout,
    default_b1_grid,
    scale_layout,
    sweep_b1,
    sweep_cutoff,
)
from hexlift.tuning import FIELDS, max_b1


def test_max_b1():
    assert max_b1(400, 1.0) == 20
    assert max_b1(400, 0.25) == 40
    assert max_b1(5, 1.0) == 3


def test_default_grid_shape():
    grid = default_b1_grid(2000, 1.0)
    assert grid[0] == 2
    assert grid[-1] == max_b1(2000, 1.0)
    assert grid == sorted(set(grid))
    assert len(grid) <= 12
    assert default_b1_grid(5, 1.0) == [2, 3]


def test_sweep_sorted_by_a1(small_2nc7, small_true_layout):
    data, _ = small_2nc7
    records = sweep_b1(data, small_true_layout, b1_values=[4, 12, 8])
    a1s = [r.a1 for r in records]
    assert a1s == sorted(a1s)
    assert [r.b1 for r in records] == [12, 8, 4]  # a1 decreases in b1


def test_record_identities(small_2nc7, small_true_layout):
    data, _ = small_2nc7
    layout = small_true_layout
    for rec in sweep_b1(data, layout, b1_values=[5, 9]):
        assert rec.layout_id == layout.layout_id
        assert rec.b == rec.b1 * rec.b2
        assert rec.mean_count == pytest.approx(layout.n / rec.m)
        assert rec.mean_std_count == pytest.approx(1.0 / rec.m)
        assert rec.nonempty_frac == pytest.approx(rec.m / rec.b)
        assert 0 < rec.nonempty_frac <= 1
        assert rec.cutoff == 0.0
        assert rec.hbe > 0
        assert set(rec.as_dict()) == set(FIELDS)


def test_hbe_decreases_with_a1(small_2nc7, small_true_layout):
    # finer grids (smaller binwidth) fit the data better; on this
    # structured layout the trend is monotone
    data, _ = small_2nc7
    records = sweep_b1(data, small_true_layout)
    rho = spearmanr([r.a1 for r in records], [r.hbe for r in records]).statistic
    assert rho > 0.9


def test_out_of_range_b1_rejected(small_2nc7, small_true_layout):
    data, _ = small_2nc7
    with pytest.raises(ValueError, match="out of range"):
        sweep_b1(data, small_true_layout, b1_values=[1])
    with pytest.raises(ValueError, match="out of range"):
        sweep_b1(data, small_true_layout, b1_values=[10_000])


def test_cutoff_sweep_product(small_2nc7, small_true_layout):
    data, _ = small_2nc7
    b1s = [4, 8]
    records = sweep_cutoff(data, small_true_layout, b1_values=b1s)
    assert len(records) == len(b1s) * len(DEFAULT_CUTOFFS)
    got = {(r.b1, r.cutoff) for r in records}
    assert got == {(b1, c) for b1 in b1s for c in DEFAULT_CUTOFFS}
    # cutoff can only merge bins away
    by_b1 = {}
    for r in records:
        by_b1.setdefault(r.b1, []).append(r)
    for recs in by_b1.values():
        ms = [r.m for r in sorted(recs, key=lambda r: r.cutoff)]
        assert ms == sorted(ms, reverse=True)


def test_sweep_deterministic(small_2nc7, small_true_layout):
    data, _ = small_2nc7
    a = sweep_b1(data, small_true_layout, b1_values=[6])
    b = sweep_b1(data, small_true_layout, b1_values=[6])
    assert a == b


def test_sweep_small_layout():
    rng = np.random.default_rng(0)
    data = rng.normal(size=(30, 4))
    layout = scale_layout(RawLayout(data[:, :2], "tiny"))
    records = sweep_b1(data, layout)
    assert all(2 <= r.b1 <= max_b1(30, layout.r2) for r in records)
