import numpy as np
import pytest

import ballmapper as bm

AUTO_AXES = ("mpg", "trunk", "weight", "length", "turn", "displacement", "gear_ratio")


@pytest.fixture(scope="session")
def auto_raw():
    return bm.load_csv(bm.auto_csv_path())


@pytest.fixture(scope="session")
def auto_cover(auto_raw):
    """The shipped fixture covered at radius 1.5 over 7 standardized axes."""
    cloud, dropped = bm.validate_axes(auto_raw, AUTO_AXES)
    assert dropped == ()
    std, _ = bm.standardize(cloud)
    return bm.build_cover(std, 1.5)


@pytest.fixture
def line_cloud():
    """Three collinear 1-D points; radius 1 gives two overlapping balls."""
    return bm.PointCloud(("x",), np.array([[0.0], [1.0], [2.0]]), (0, 1, 2))


@pytest.fixture
def line_cover(line_cloud):
    return bm.build_cover(line_cloud, 1.0)


def random_cloud(rng, n=None, k=None):
    n = n if n is not None else int(rng.integers(1, 201))
    k = k if k is not None else int(rng.integers(1, 6))
    values = rng.normal(size=(n, k))
    return bm.PointCloud(tuple(f"x{j}" for j in range(k)), values, tuple(range(n)))
