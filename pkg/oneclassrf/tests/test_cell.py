from __future__ import print_function, division

import numpy as np
import numpy.testing as npt
import pytest

from oneclassrf.exceptions import PreconditionError
from oneclassrf.tree import Cell, cell_volume, split_cell, bounding_box


def test_cell_volume():
    assert cell_volume(Cell([0, 0], [1, 1])) == 1.0
    assert cell_volume(Cell([0, 0], [2, 0.5])) == 1.0
    assert cell_volume(Cell([0, 3], [1, 3])) == 0.0
    assert Cell([0, 3], [1, 3]).log_volume == -np.inf


def test_split_cell_volumes():
    left, right = split_cell(Cell([0, 0], [1, 1]), 0, 0.25)
    npt.assert_allclose([left.volume, right.volume], [0.25, 0.75])
    assert left.upper[0] == 0.25 == right.lower[0]

    left, right = split_cell(Cell([0, 0], [4, 1]), 1, 0.5)
    npt.assert_allclose([left.volume, right.volume], [2.0, 2.0])


def test_split_cell_rejects_boundary():
    cell = Cell([0, 0], [1, 1])
    for threshold in (0.0, 1.0, -0.5, 2.0):
        with pytest.raises(PreconditionError):
            split_cell(cell, 0, threshold)
    with pytest.raises(PreconditionError):
        split_cell(cell, 2, 0.5)


def test_split_volumes_add_up():
    random = np.random.RandomState(0)
    for _ in range(100):
        lower = random.uniform(-5, 5, size=4)
        upper = lower + random.uniform(0.1, 3, size=4)
        cell = Cell(lower, upper)
        feature = random.randint(4)
        threshold = random.uniform(lower[feature], upper[feature])
        left, right = cell.split(feature, threshold)
        npt.assert_allclose(left.volume + right.volume, cell.volume,
                            rtol=1e-9)
        npt.assert_allclose(left.volume / cell.volume,
                            cell.lambda_left(feature, threshold), rtol=1e-12)


def test_invalid_cells():
    with pytest.raises(PreconditionError):
        Cell([1.0], [0.0])
    with pytest.raises(PreconditionError):
        Cell([0.0, 0.0], [1.0])
    with pytest.raises(PreconditionError):
        Cell([0.0], [np.inf])


def test_cell_is_read_only():
    cell = Cell([0, 0], [1, 1])
    with pytest.raises(ValueError):
        cell.lower[0] = -1


def test_bounding_box():
    X = np.array([[0.0, 5.0], [2.0, -1.0], [1.0, 3.0]])
    cell = bounding_box(X)
    npt.assert_array_equal(cell.lower, [0, -1])
    npt.assert_array_equal(cell.upper, [2, 5])
    assert all(cell.contains(x) for x in X)
    assert not cell.contains([3.0, 0.0])
