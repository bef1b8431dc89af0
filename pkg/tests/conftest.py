import numpy as np
import pytest

from hexlift import RawLayout, SyntheticSpec, gen_2nc7, scale_layout
from hexlift.simdata import true_layout


@pytest.fixture(scope="session")
def small_2nc7():
    data, labels = gen_2nc7(SyntheticSpec(n_per_cluster=200, seed=11))
    return data, labels


@pytest.fixture(scope="session")
def small_true_layout(small_2nc7):
    data, _ = small_2nc7
    return scale_layout(RawLayout(true_layout(data), "true"))
