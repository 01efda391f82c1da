# Author: oneclassrf developers
# Contributors:
# All rights reserved.

#-----------------------------------------------------------------------------
# Imports
#-----------------------------------------------------------------------------

from __future__ import absolute_import, print_function, division

import logging
import numbers
import time
import warnings

import numpy as np
from joblib import Parallel, delayed
from sklearn.utils import check_random_state

from .params import HyperParams
from . import scoring
from ..base import BaseEstimator
from ..exceptions import PreconditionError, TrainingTimeout, ImportanceWarning
from ..tree import (GrowthConfig, grow_tree, grow_isolation_tree, node_gain,
                    node_split, OC_GINI, RANDOM)
from ..utils import array2d

__all__ = ['Forest', 'train', 'tree_rng', 'variable_importance', 'OneClassRF']

logger = logging.getLogger(__name__)

#-----------------------------------------------------------------------------
# Code
#-----------------------------------------------------------------------------


class Forest(object):
    """A trained ensemble of one-class (or isolation) trees.

    Parameters
    ----------
    trees : list of OneClassTree
    hyperparams : HyperParams
    train_dims : int
        Number of features of the training data.
    feature_names : list of str, optional
    """

    def __init__(self, trees, hyperparams, train_dims, feature_names=None):
        trees = tuple(trees)
        if len(trees) != hyperparams.n_trees:
            raise PreconditionError('expected %d trees, got %d'
                                    % (hyperparams.n_trees, len(trees)))
        if feature_names is not None:
            feature_names = tuple(str(n) for n in feature_names)
            if len(feature_names) != train_dims:
                raise PreconditionError('expected %d feature names, got %d'
                                        % (train_dims, len(feature_names)))
        self.trees = trees
        self.hyperparams = hyperparams
        self.train_dims = int(train_dims)
        self.feature_names = feature_names

    @property
    def kind(self):
        return 'iforest' if self.hyperparams.criterion == RANDOM else 'ocrf'

    @property
    def subsample_size(self):
        return self.trees[0].subsample_size

    def __repr__(self):
        return 'Forest(kind=%s, n_trees=%d, train_dims=%d, criterion=%s)' % (
            self.kind, len(self.trees), self.train_dims,
            self.hyperparams.criterion)


def tree_rng(seed, index):
    """Random stream of tree ``index`` under master ``seed``.

    Streams are spawned from ``SeedSequence(seed)`` by tree index, so a
    tree's draws do not depend on how many trees are built, or in which
    order or process.
    """
    return np.random.default_rng(
        np.random.SeedSequence(seed, spawn_key=(int(index),)))


def _fit_tree(X, params, index, deadline=None):
    if deadline is not None and time.time() > deadline:
        raise TrainingTimeout('deadline passed before tree %d' % index)
    rng = tree_rng(params.seed, index)
    n_rows, n_dims = X.shape
    size = params.subsample_size(n_rows)
    rows = rng.choice(n_rows, size=size, replace=False)
    features = np.sort(rng.choice(n_dims, size=params.n_tree_features(n_dims),
                                  replace=False))
    sample = X[np.ix_(rows, features)]
    max_depth = params.depth_cap(size)

    if params.criterion == RANDOM:
        return grow_isolation_tree(sample, max_depth, rng=rng,
                                   feature_subset=features)
    config = GrowthConfig(
        max_depth=max_depth, max_features_node=params.max_features_node,
        criterion=params.criterion, gamma=params.gamma,
        min_node_points=params.min_samples_split, rng=rng,
        naive_alpha_n=params.naive_alpha_n, min_density=params.min_density,
        max_density=params.max_density)
    return grow_tree(sample, config, feature_subset=features)


def train(dataset, params=None, n_jobs=1, deadline=None):
    """Train a forest.

    Each tree draws its rows and then its features without replacement from
    its own random stream (see :func:`tree_rng`), and is grown on the
    resulting sub-matrix.

    Parameters
    ----------
    dataset : Dataset or array-like, shape=(n_rows, n_features)
        Labels, if any, are ignored.
    params : HyperParams, optional
    n_jobs : int, default=1
        Number of joblib workers. The forest does not depend on it.
    deadline : float, optional
        ``time.time()`` after which no new tree is started;
        :class:`TrainingTimeout` is raised instead.

    Returns
    -------
    forest : Forest
    """
    if params is None:
        params = HyperParams()
    X = array2d(getattr(dataset, 'features', dataset))
    feature_names = getattr(dataset, 'feature_names', None)
    if len(X) < 2:
        raise PreconditionError('training needs at least 2 rows, got %d'
                                % len(X))

    start = time.time()
    trees = Parallel(n_jobs=n_jobs)(
        delayed(_fit_tree)(X, params, k, deadline)
        for k in range(params.n_trees))
    logger.info('trained %d %s trees on %d x %d in %.2f s', len(trees),
                params.criterion, X.shape[0], X.shape[1], time.time() - start)
    return Forest(trees, params, X.shape[1], feature_names)


def variable_importance(forest):
    """Per-feature one-class Gini impurity decrease, averaged over trees.

    Every internal node contributes ``(n_t / subsample_size) * gain`` to the
    feature it splits on, where gain is the one-class Gini decrease of its
    split. Features never split on get 0.

    Returns
    -------
    importances : np.ndarray, shape=(train_dims,)
    """
    if forest.hyperparams.criterion != OC_GINI:
        warnings.warn('importances are one-class Gini decreases, this forest '
                      'was grown with %r' % forest.hyperparams.criterion,
                      ImportanceWarning)
    gamma = forest.hyperparams.gamma
    importances = np.zeros(forest.train_dims)
    for tree in forest.trees:
        for node in tree.iter_nodes():
            if node.is_leaf:
                continue
            gain = node_gain(node.n_inliers, node_split(node), gamma)
            feature = tree.feature_subset[node.split_feature]
            importances[feature] += node.n_inliers / tree.subsample_size * gain
    return importances / len(forest.trees)


def _resolve_count_or_fraction(value, name, floor=1):
    # int -> absolute count, float -> fraction in (0, 1] of at least floor
    if value is None:
        return {}
    if isinstance(value, numbers.Integral):
        return {name: int(value)}
    return {name + '_fraction': float(value), name + '_floor': floor}


def _draw_seed(random_state):
    if isinstance(random_state, numbers.Integral):
        return int(random_state)
    return int(check_random_state(random_state).randint(np.iinfo(np.int32).max))


class OneClassRF(BaseEstimator):
    """One-class random forest.

    Trees are grown without outlier labels: at each node, the split
    minimizes a one-class impurity proxy which pretends ``gamma * n_t``
    uniform outliers fill the node's cell.

    Parameters
    ----------
    n_trees : int, default=100
    max_samples : int or float, optional
        Rows per tree. An int is an absolute count, a float a fraction of
        the rows (at least 2). Defaults to 20% of the rows and at least 100.
    max_features_tree : int or float, optional
        Features per tree, same convention. Defaults to 50% of the features
        and at least 5.
    max_features_node : int, default=5
        Features searched at each node.
    gamma : float, default=1.0
        Assumed outlier to inlier ratio in every node.
    max_depth : int, optional
        Defaults to ``ceil(log2(rows per tree))``.
    criterion : {'oc-gini', 'oc-shannon', 'naive'}, default='oc-gini'
    naive_alpha_n : float, optional
        Outlier budget, only read by the 'naive' criterion.
    min_samples_split : int, default=2
    min_density, max_density : float, optional
        Alternative stopping rules on ``n_t / Leb(cell)``.
    random_state : int or RandomState, optional
    n_jobs : int, default=1

    Attributes
    ----------
    forest_ : Forest
    n_features_in_ : int
    """

    def __init__(self, n_trees=100, max_samples=None, max_features_tree=None,
                 max_features_node=5, gamma=1.0, max_depth=None,
                 criterion=OC_GINI, naive_alpha_n=None, min_samples_split=2,
                 min_density=None, max_density=None, random_state=None,
                 n_jobs=1):
        self.n_trees = n_trees
        self.max_samples = max_samples
        self.max_features_tree = max_features_tree
        self.max_features_node = max_features_node
        self.gamma = gamma
        self.max_depth = max_depth
        self.criterion = criterion
        self.naive_alpha_n = naive_alpha_n
        self.min_samples_split = min_samples_split
        self.min_density = min_density
        self.max_density = max_density
        self.random_state = random_state
        self.n_jobs = n_jobs

    def hyperparams(self):
        """The :class:`HyperParams` this estimator trains with."""
        kwargs = dict(
            n_trees=self.n_trees, max_features_node=self.max_features_node,
            gamma=self.gamma, max_depth=self.max_depth,
            criterion=self.criterion, naive_alpha_n=self.naive_alpha_n,
            min_samples_split=self.min_samples_split,
            min_density=self.min_density, max_density=self.max_density,
            seed=_draw_seed(self.random_state))
        kwargs.update(_resolve_count_or_fraction(self.max_samples,
                                                 'max_samples', floor=2))
        kwargs.update(_resolve_count_or_fraction(self.max_features_tree,
                                                 'max_features_tree'))
        return HyperParams(**kwargs)

    def fit(self, X, y=None, deadline=None):
        """Grow the forest on ``X``; ``y`` is ignored.

        Parameters
        ----------
        X : array-like or Dataset
        y : None
        deadline : float, optional
            See :func:`train`.

        Returns
        -------
        self
        """
        self.forest_ = train(X, self.hyperparams(), n_jobs=self.n_jobs,
                             deadline=deadline)
        self.n_features_in_ = self.forest_.train_dims
        return self

    def _check_fitted(self):
        if not hasattr(self, 'forest_'):
            raise PreconditionError('%s is not fitted yet'
                                    % self.__class__.__name__)

    def score_samples(self, X, kind='depth'):
        """Raw score of ``kind`` ('depth', 'stepwise-density' or
        'typical-cell') in its natural orientation."""
        self._check_fitted()
        return scoring.score_samples(self.forest_, X, kind)

    def decision_function(self, X, kind='depth'):
        """Abnormality: higher is more abnormal whatever ``kind`` is."""
        self._check_fitted()
        return scoring.abnormality(self.forest_, X, kind)

    def path_measures(self, X):
        self._check_fitted()
        return scoring.path_measures(self.forest_, X)

    @property
    def feature_importances_(self):
        self._check_fitted()
        return variable_importance(self.forest_)

    def summarize(self):
        self._check_fitted()
        forest = self.forest_
        n_nodes = [tree.n_nodes for tree in forest.trees]
        depths = [tree.max_leaf_depth for tree in forest.trees]
        return '\n'.join([
            '%s' % self.__class__.__name__,
            '-' * len(self.__class__.__name__),
            'criterion: %s, gamma: %g' % (forest.hyperparams.criterion,
                                          forest.hyperparams.gamma),
            'trees: %d, rows per tree: %d, features: %d'
            % (len(forest.trees), forest.subsample_size, forest.train_dims),
            'nodes per tree: mean %.1f, max %d' % (np.mean(n_nodes),
                                                   max(n_nodes)),
            'leaf depth: mean of max %.1f, max %d' % (np.mean(depths),
                                                      max(depths)),
        ])
