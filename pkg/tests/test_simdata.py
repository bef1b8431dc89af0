import numpy as np
import pytest
from scipy.spatial.distance import cdist

from hexlift import SyntheticSpec, gen_2nc7, true_layout


def test_shapes_and_labels():
    data, labels = gen_2nc7(SyntheticSpec(n_per_cluster=50, seed=1))
    assert data.shape == (100, 7)
    assert labels.shape == (100,)
    assert np.array_equal(np.unique(labels), [0, 1])
    assert (labels == 0).sum() == 50


def test_deterministic_per_seed():
    spec = SyntheticSpec(n_per_cluster=40, seed=7)
    d1, l1 = gen_2nc7(spec)
    d2, l2 = gen_2nc7(spec)
    assert np.array_equal(d1, d2)
    assert np.array_equal(l1, l2)
    d3, _ = gen_2nc7(SyntheticSpec(n_per_cluster=40, seed=8))
    assert not np.array_equal(d1, d3)


def test_cluster_separation_scales():
    for sep in (0.5, 1.0, 2.0):
        data, labels = gen_2nc7(SyntheticSpec(n_per_cluster=200, separation=sep, seed=2))
        gap = data[labels == 1, 0].min() - data[labels == 0, 0].max()
        # structural x1 gap is exactly sep; noise-free since x1 is structural
        assert gap == pytest.approx(sep, abs=0.05)
        dmin = cdist(data[labels == 0, :4], data[labels == 1, :4]).min()
        assert dmin >= sep - 1e-9


def test_cluster_a_is_two_dimensional():
    data, labels = gen_2nc7(SyntheticSpec(n_per_cluster=500, seed=3))
    a = data[labels == 0, :4]
    a = a - a.mean(axis=0)
    s = np.linalg.svd(a, compute_uv=False)
    var = s**2 / (s**2).sum()
    # a curved sheet: 3 directions carry variance (u, v, and curvature),
    # the fourth structural variable is identically zero
    assert var[:3].sum() > 0.999
    assert np.all(data[labels == 0, 3] == 0.0)


def test_cluster_b_uses_all_four():
    data, labels = gen_2nc7(SyntheticSpec(n_per_cluster=500, seed=4))
    b = data[labels == 1, :4]
    assert b.std(axis=0).min() > 0.05


def test_noise_dims_are_noise():
    data, _ = gen_2nc7(SyntheticSpec(n_per_cluster=2000, noise_sd=0.05, seed=5))
    noise = data[:, 4:]
    assert abs(noise.mean()) < 0.01
    assert noise.std(axis=0) == pytest.approx([0.05] * 3, rel=0.1)
    # noise is independent of the structure
    corr = np.corrcoef(data.T)[:4, 4:]
    assert np.abs(corr).max() < 0.05


def test_true_layout_is_first_two_columns():
    data, _ = gen_2nc7(SyntheticSpec(n_per_cluster=30, seed=6))
    lay = true_layout(data)
    assert lay.shape == (60, 2)
    assert np.array_equal(lay, data[:, :2])
    lay[0, 0] = 99.0  # must be a copy
    assert data[0, 0] != 99.0


def test_spec_validation():
    with pytest.raises(ValueError, match="n_per_cluster"):
        SyntheticSpec(n_per_cluster=5)
    with pytest.raises(ValueError, match="noise_sd"):
        SyntheticSpec(noise_sd=0.0)
    with pytest.raises(ValueError, match="separation"):
        SyntheticSpec(separation=-1.0)
