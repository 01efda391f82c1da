from __future__ import print_function, division

import numpy as np
import numpy.testing as npt
import pytest

from oneclassrf.ensemble import (IsolationForest, iforest_params,
                                 train_iforest, path_measures, dumps)
from oneclassrf.exceptions import PreconditionError


def test_iforest_params():
    params = iforest_params()
    assert params.n_trees == 100
    assert params.criterion == 'random'
    assert params.subsample_size(1000) == 256
    assert params.subsample_size(100) == 100
    assert params.n_tree_features(37) == 37
    assert params.depth_cap(256) == 8
    assert params.depth_cap(100) == 7


def test_iforest_trees():
    X = np.random.RandomState(0).normal(size=(1000, 4))
    forest = train_iforest(X, n_trees=5, seed=1)
    assert forest.kind == 'iforest'
    for tree in forest.trees:
        assert tree.subsample_size == 256
        npt.assert_array_equal(tree.feature_subset, [0, 1, 2, 3])
        assert tree.max_leaf_depth <= 8


def test_small_dataset_depth_cap():
    X = np.random.RandomState(1).uniform(size=(100, 2))
    forest = train_iforest(X, n_trees=5, seed=0)
    assert all(t.subsample_size == 100 for t in forest.trees)
    assert all(t.max_leaf_depth <= 7 for t in forest.trees)


def test_outlier_is_isolated_early():
    random = np.random.RandomState(2)
    X = np.concatenate([random.uniform(size=(255, 1)), [[10.0]]])
    forest = train_iforest(X, n_trees=100, seed=0)
    measures = path_measures(forest, X).mean(axis=0)
    assert measures[-1] < measures[:-1].mean()
    assert measures[-1] < measures[:-1].min()


def test_estimator():
    random = np.random.RandomState(3)
    X = random.normal(size=(300, 2))
    model = IsolationForest(n_trees=20, random_state=4).fit(X)
    assert model.n_features_in_ == 2
    far = model.decision_function([[8.0, 8.0]])
    near = model.decision_function([[0.0, 0.0]])
    assert far > near
    assert 'IsolationForest' in model.summarize()
    other = IsolationForest(n_trees=20, random_state=4).fit(X)
    assert dumps(model.forest_) == dumps(other.forest_)


def test_single_row_trees_are_rejected():
    X = np.random.RandomState(4).normal(size=(5, 2))
    with pytest.raises(PreconditionError):
        IsolationForest(n_trees=3, max_samples=1).fit(X)
    scores = IsolationForest(n_trees=3, max_samples=2,
                             random_state=0).fit(X).score_samples(X)
    assert np.all((scores > 0) & (scores <= 1))
