# Author: oneclassrf developers
# Contributors:
# All rights reserved.

from __future__ import absolute_import, print_function, division

from .forest import Forest, train, _draw_seed
from .params import HyperParams
from . import scoring
from ..base import BaseEstimator
from ..exceptions import PreconditionError
from ..tree import RANDOM

__all__ = ['iforest_params', 'train_iforest', 'IsolationForest']


def iforest_params(n_trees=100, max_samples=256, seed=0):
    """HyperParams of an isolation forest.

    Every tree uses all the features and ``min(max_samples, n_rows)`` rows;
    the depth cap is ``ceil(log2(rows per tree))``.
    """
    return HyperParams(n_trees=n_trees, max_samples=max_samples,
                       max_features_tree_fraction=1.0, criterion=RANDOM,
                       seed=seed)


def train_iforest(dataset, n_trees=100, max_samples=256, seed=0, n_jobs=1,
                  deadline=None):
    """Train an isolation forest baseline.

    Parameters
    ----------
    dataset : Dataset or array-like, shape=(n_rows, n_features)
    n_trees : int, default=100
    max_samples : int, default=256
        Rows per tree, clamped to the number of rows.
    seed : int, default=0
    n_jobs : int, default=1
    deadline : float, optional

    Returns
    -------
    forest : Forest
        Its trees share the one-class tree structure, so every score kind
        applies.
    """
    return train(dataset, iforest_params(n_trees, max_samples, seed),
                 n_jobs=n_jobs, deadline=deadline)


class IsolationForest(BaseEstimator):
    """Isolation forest: trees of uniformly random splits.

    Parameters
    ----------
    n_trees : int, default=100
    max_samples : int, default=256
    random_state : int or RandomState, optional
    n_jobs : int, default=1

    Attributes
    ----------
    forest_ : Forest
    n_features_in_ : int
    """

    def __init__(self, n_trees=100, max_samples=256, random_state=None,
                 n_jobs=1):
        self.n_trees = n_trees
        self.max_samples = max_samples
        self.random_state = random_state
        self.n_jobs = n_jobs

    def hyperparams(self):
        return iforest_params(self.n_trees, self.max_samples,
                              _draw_seed(self.random_state))

    def fit(self, X, y=None, deadline=None):
        self.forest_ = train(X, self.hyperparams(), n_jobs=self.n_jobs,
                             deadline=deadline)
        self.n_features_in_ = self.forest_.train_dims
        return self

    def _check_fitted(self):
        if not isinstance(getattr(self, 'forest_', None), Forest):
            raise PreconditionError('IsolationForest is not fitted yet')

    def score_samples(self, X, kind='depth'):
        self._check_fitted()
        return scoring.score_samples(self.forest_, X, kind)

    def decision_function(self, X, kind='depth'):
        self._check_fitted()
        return scoring.abnormality(self.forest_, X, kind)

    def path_measures(self, X):
        self._check_fitted()
        return scoring.path_measures(self.forest_, X)

    def summarize(self):
        self._check_fitted()
        return ('IsolationForest\n---------------\n'
                'trees: %d, rows per tree: %d, features: %d'
                % (len(self.forest_.trees), self.forest_.subsample_size,
                   self.forest_.train_dims))
