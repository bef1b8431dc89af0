import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from hexlift import RawLayout, scale_layout


def test_range_ratio():
    # spans [-5,5] x [-2,2] -> ratio 4/10
    pts = np.array([[-5.0, -2.0], [5.0, 2.0], [0.0, 0.0], [2.5, -1.0]])
    scaled = scale_layout(RawLayout(pts, "a"))
    assert scaled.points[:, 0].min() == 0.0
    assert scaled.points[:, 0].max() == 1.0
    assert scaled.points[:, 1].min() == 0.0
    assert scaled.points[:, 1].max() == pytest.approx(0.4)
    assert scaled.r2 == pytest.approx(0.4)


def test_identity_when_already_scaled():
    pts = np.array([[0.0, 0.0], [1.0, 1.0], [0.3, 0.7], [0.9, 0.1]])
    scaled = scale_layout(RawLayout(pts, "a"), preserve_ratio=True)
    assert np.array_equal(scaled.points, pts)
    assert scaled.r2 == 1.0


def test_ignore_ratio():
    pts = np.array([[0.0, 0.0], [10.0, 1.0], [5.0, 0.5]])
    scaled = scale_layout(RawLayout(pts, "a"), preserve_ratio=False)
    assert scaled.points[:, 0].max() == 1.0
    assert scaled.points[:, 1].max() == 1.0
    assert scaled.r2 == 1.0


def test_axis_swap_when_second_axis_wider():
    pts = np.array([[0.0, 0.0], [1.0, 10.0], [0.5, 3.0]])
    scaled = scale_layout(RawLayout(pts, "a"))
    assert scaled.axes_swapped
    assert scaled.r2 <= 1.0
    assert scaled.points[:, 0].max() == 1.0


def test_degenerate_column_errors():
    pts = np.array([[0.0, 1.0], [0.0, 2.0], [0.0, 3.0]])
    with pytest.raises(ValueError, match="column 0"):
        RawLayout(pts, "a")


def test_nonfinite_rejected():
    pts = np.array([[0.0, 1.0], [np.nan, 2.0], [1.0, 3.0]])
    with pytest.raises(ValueError, match="finite"):
        RawLayout(pts, "a")


finite_layouts = arrays(
    np.float64, (12, 2),
    elements=st.floats(-1e6, 1e6, allow_nan=False, width=64),
).filter(lambda a: np.ptp(a[:, 0]) > 1e-6 and np.ptp(a[:, 1]) > 1e-6)


@given(finite_layouts)
@settings(max_examples=200, deadline=None)
def test_idempotent_bit_identical(pts):
    once = scale_layout(RawLayout(pts, "a"))
    twice = scale_layout(RawLayout(once.points, "a"))
    assert np.array_equal(once.points, twice.points)
    assert twice.r2 == once.r2


@given(finite_layouts)
@settings(max_examples=200, deadline=None)
def test_rank_preserved_and_r2_bounded(pts):
    scaled = scale_layout(RawLayout(pts, "a"))
    src = pts[:, ::-1] if scaled.axes_swapped else pts
    for col in range(2):
        # weak monotonicity: scaling may merge values closer than the
        # float resolution of the range, but must never reorder them
        order = np.argsort(src[:, col], kind="stable")
        assert np.all(np.diff(scaled.points[order, col]) >= 0.0)
    assert 0.0 < scaled.r2 <= 1.0
