from __future__ import print_function, division

import warnings

import numpy as np
import numpy.testing as npt
import pytest
from sklearn import clone

from oneclassrf.dataset import Dataset
from oneclassrf.ensemble import (HyperParams, OneClassRF, Forest, train,
                                 tree_rng, variable_importance, dumps)
from oneclassrf.exceptions import PreconditionError, ImportanceWarning, \
    TrainingTimeout


def test_default_subsample_sizes():
    X = np.random.RandomState(0).uniform(size=(1000, 10))
    forest = train(X, HyperParams(n_trees=3))
    assert len(forest.trees) == 3
    for tree in forest.trees:
        assert tree.subsample_size == 200
        assert len(tree.feature_subset) == 5
        assert len(np.unique(tree.feature_subset)) == 5
        assert tree.root.n_inliers == 200
        assert tree.max_leaf_depth <= 8


def test_small_dataset_uses_every_row():
    X = np.random.RandomState(1).uniform(size=(50, 3))
    forest = train(X, HyperParams(n_trees=2))
    assert forest.subsample_size == 50
    assert all(len(t.feature_subset) == 3 for t in forest.trees)


def test_hyperparams_sizes():
    params = HyperParams()
    assert params.subsample_size(1000) == 200
    assert params.subsample_size(50) == 50
    assert params.subsample_size(10000) == 2000
    assert params.n_tree_features(10) == 5
    assert params.n_tree_features(3) == 3
    assert params.n_tree_features(30) == 15
    assert params.depth_cap(200) == 8
    assert HyperParams(max_samples=30).subsample_size(1000) == 30
    assert HyperParams(max_depth=3).depth_cap(200) == 3


def test_hyperparams_validation():
    with pytest.raises(PreconditionError):
        HyperParams(gamma=0)
    with pytest.raises(PreconditionError):
        HyperParams(max_samples_fraction=1.5)
    with pytest.raises(PreconditionError):
        HyperParams(criterion='naive')
    with pytest.raises(PreconditionError):
        HyperParams(n_trees=0)
    with pytest.raises(PreconditionError):
        HyperParams.from_dict({'n_tree': 3})
    params = HyperParams(gamma=2.0, seed=5)
    assert HyperParams.from_dict(params.to_dict()) == params
    assert params.replace(gamma=1.0) != params


def test_training_is_deterministic():
    X = np.random.RandomState(2).normal(size=(300, 4))
    params = HyperParams(n_trees=5, seed=11)
    assert dumps(train(X, params)) == dumps(train(X, params))
    assert dumps(train(X, params)) != dumps(train(X, params.replace(seed=12)))


def test_n_jobs_does_not_change_the_forest():
    X = np.random.RandomState(3).normal(size=(300, 4))
    params = HyperParams(n_trees=6, seed=3)
    assert dumps(train(X, params, n_jobs=1)) == dumps(train(X, params,
                                                            n_jobs=2))


def test_tree_streams_do_not_depend_on_forest_size():
    X = np.random.RandomState(4).normal(size=(200, 3))
    small = train(X, HyperParams(n_trees=2, seed=1))
    large = train(X, HyperParams(n_trees=5, seed=1))
    for a, b in zip(small.trees, large.trees):
        npt.assert_array_equal(a.arrays['threshold'], b.arrays['threshold'])
    assert (tree_rng(1, 0).integers(2 ** 32)
            == tree_rng(1, 0).integers(2 ** 32))
    assert (tree_rng(1, 0).integers(2 ** 32)
            != tree_rng(1, 1).integers(2 ** 32))


def test_labels_are_ignored():
    random = np.random.RandomState(5)
    X = random.normal(size=(150, 3))
    labels = (random.uniform(size=150) < 0.1).astype(int)
    names = ['a', 'b', 'c']
    params = HyperParams(n_trees=4, seed=2)
    with_labels = train(Dataset(X, labels, names), params)
    without = train(Dataset(X, None, names), params)
    assert dumps(with_labels) == dumps(without)
    assert with_labels.feature_names == ('a', 'b', 'c')


def test_training_preconditions():
    with pytest.raises(PreconditionError):
        train(np.zeros((1, 3)))
    with pytest.raises(PreconditionError):
        Forest([], HyperParams(n_trees=1), 3)


def test_deadline_in_the_past():
    X = np.random.RandomState(6).normal(size=(100, 2))
    with pytest.raises(TrainingTimeout):
        train(X, HyperParams(n_trees=3), deadline=0.0)


def test_variable_importance():
    random = np.random.RandomState(7)
    X = np.column_stack([random.standard_cauchy(size=500),
                         random.uniform(size=500),
                         np.full(500, 3.0)])
    forest = train(X, HyperParams(n_trees=20, max_features_tree=3, seed=0))
    importances = variable_importance(forest)
    assert importances.shape == (3,)
    assert np.all(importances >= 0)
    assert importances[2] == 0
    assert importances[0] > importances[1]


def test_importance_warns_for_other_criteria():
    X = np.random.RandomState(8).normal(size=(100, 2))
    forest = train(X, HyperParams(n_trees=2, criterion='oc-shannon'))
    with pytest.warns(ImportanceWarning):
        variable_importance(forest)
    forest = train(X, HyperParams(n_trees=2))
    with warnings.catch_warnings():
        warnings.simplefilter('error', ImportanceWarning)
        variable_importance(forest)


def test_estimator():
    random = np.random.RandomState(9)
    X = random.normal(size=(400, 3))
    model = OneClassRF(n_trees=10, random_state=0).fit(X)
    assert model.n_features_in_ == 3
    assert model.forest_.subsample_size == 100

    scores = model.score_samples(X[:20])
    assert scores.shape == (20,)
    assert np.all((scores > 0) & (scores <= 1))
    npt.assert_array_equal(model.decision_function(X[:20]), scores)
    density = model.score_samples(X[:20], kind='stepwise-density')
    npt.assert_allclose(
        model.decision_function(X[:20], kind='stepwise-density'),
        -np.log(density))
    assert model.path_measures(X[:20]).shape == (10, 20)
    assert model.feature_importances_.shape == (3,)
    assert 'OneClassRF' in model.summarize()

    again = clone(model).fit(X)
    npt.assert_array_equal(again.score_samples(X[:20]), scores)


def test_estimator_count_or_fraction():
    X = np.random.RandomState(10).normal(size=(400, 8))
    model = OneClassRF(n_trees=2, max_samples=0.5, max_features_tree=2,
                       random_state=0).fit(X)
    assert model.forest_.subsample_size == 200
    assert all(len(t.feature_subset) == 2 for t in model.forest_.trees)
    model = OneClassRF(n_trees=2, max_samples=30, random_state=0).fit(X)
    assert model.forest_.subsample_size == 30


def test_unfitted_estimator():
    with pytest.raises(PreconditionError):
        OneClassRF().score_samples(np.zeros((2, 2)))


def test_trees_need_two_rows():
    with pytest.raises(PreconditionError):
        HyperParams(max_samples=1)
    with pytest.raises(PreconditionError):
        HyperParams(max_samples_floor=1)

    # 10% of 5 rows rounds up to 1 row, the floor lifts it to 2
    X = np.random.RandomState(12).normal(size=(5, 2))
    model = OneClassRF(n_trees=3, max_samples=0.1, random_state=0).fit(X)
    assert model.forest_.subsample_size == 2
    scores = model.score_samples(X)
    assert np.all(np.isfinite(scores))
    assert np.all((scores > 0) & (scores <= 1))
