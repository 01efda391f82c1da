# Author: oneclassrf developers
# Contributors:
# All rights reserved.

#-----------------------------------------------------------------------------
# Imports
#-----------------------------------------------------------------------------

from __future__ import absolute_import, print_function, division

import logging

import numpy as np

from .cell import bounding_box
from .model import TreeNode, OneClassTree
from ..exceptions import PreconditionError
from ..utils import array2d

__all__ = ['grow_isolation_tree']

logger = logging.getLogger(__name__)

#-----------------------------------------------------------------------------
# Code
#-----------------------------------------------------------------------------


def _uniform_open(rng, lo, hi):
    # Generator.uniform samples [lo, hi); lo itself would give an empty left
    # child, so redraw
    while True:
        value = rng.uniform(lo, hi)
        if lo < value < hi:
            return value


def _grow(X, cell, depth, max_depth, rng):
    n_t = len(X)
    if depth >= max_depth or n_t < 2:
        return TreeNode(cell, depth, n_t)

    mins, maxs = X.min(axis=0), X.max(axis=0)
    splittable = np.nonzero(maxs > mins)[0]
    if len(splittable) == 0:
        return TreeNode(cell, depth, n_t)

    feature = splittable[rng.integers(len(splittable))]
    threshold = _uniform_open(rng, mins[feature], maxs[feature])
    left_cell, right_cell = cell.split(feature, threshold)
    go_left = X[:, feature] < threshold
    left = _grow(X[go_left], left_cell, depth + 1, max_depth, rng)
    right = _grow(X[~go_left], right_cell, depth + 1, max_depth, rng)
    return TreeNode(cell, depth, n_t, feature, threshold, left, right)


def grow_isolation_tree(X, max_depth, rng=None, feature_subset=None):
    """Grow an isolation tree: completely random splits, no criterion.

    At every node a feature is drawn uniformly among those that are not
    constant on the node's points, and a threshold uniformly in the open
    interval between the node's smallest and largest value of that feature.

    Parameters
    ----------
    X : array-like, shape=(n_rows, n_dims)
        The tree's sub-sample.
    max_depth : int
        Nodes at this depth are leaves.
    rng : np.random.Generator or int, optional
    feature_subset : array-like of int, optional
        Global indices of the columns of ``X``.

    Returns
    -------
    tree : OneClassTree
        Same structure and invariants as the one-class trees, so the scoring
        functions apply unchanged.
    """
    X = array2d(X)
    if len(X) == 0 or X.shape[1] == 0:
        raise PreconditionError('cannot grow a tree on an empty sample')
    if rng is None or isinstance(rng, (int, np.integer)):
        rng = np.random.default_rng(rng)
    if feature_subset is None:
        feature_subset = np.arange(X.shape[1])

    root_cell = bounding_box(X)
    root = _grow(X, root_cell, 0, int(max_depth), rng)
    tree = OneClassTree(root, len(X), feature_subset)
    logger.debug('grew isolation %r', tree)
    return tree
