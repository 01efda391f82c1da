# Author: oneclassrf developers
# Contributors:
# All rights reserved.

#-----------------------------------------------------------------------------
# Imports
#-----------------------------------------------------------------------------

from __future__ import absolute_import, print_function, division

import logging
import math

import numpy as np

from .cell import bounding_box
from .criteria import (OC_GINI, CRITERIA, NAIVE_OC_GINI, SplitEvaluation,
                       find_best_split, oc_gini_proxy, proportional_baseline)
from .model import TreeNode, OneClassTree
from ..exceptions import PreconditionError
from ..utils import array2d

__all__ = ['GrowthConfig', 'grow_tree', 'node_gain', 'node_split',
           'default_max_depth']

logger = logging.getLogger(__name__)

#-----------------------------------------------------------------------------
# Code
#-----------------------------------------------------------------------------


def default_max_depth(subsample_size):
    """ceil(log2(subsample_size)), the depth cap used when none is given."""
    if subsample_size < 1:
        raise PreconditionError('subsample_size must be positive')
    return int(math.ceil(math.log2(subsample_size)))


class GrowthConfig(object):
    """Settings for growing a single one-class tree.

    Parameters
    ----------
    max_depth : int
        Nodes at this depth are leaves.
    max_features_node : int
        Number of features drawn (without replacement) at each node among
        which the best split is searched.
    criterion : {'oc-gini', 'oc-shannon', 'naive'}
        Proxy minimized at each split.
    gamma : float
        Outlier to inlier ratio assumed in every node.
    min_node_points : int, default=2
        Nodes with fewer inliers are leaves.
    rng : np.random.Generator or int, optional
        Random stream for the per-node feature draws.
    naive_alpha_n : float, optional
        Outlier budget of the naive criterion.
    min_density, max_density : float, optional
        Stop splitting a node when ``n_t / Leb(cell)`` is below
        ``min_density`` (the node is likely all outliers) or above
        ``max_density`` (the node is likely all inliers). Off by default.
    """

    def __init__(self, max_depth, max_features_node=5, criterion=OC_GINI,
                 gamma=1.0, min_node_points=2, rng=None, naive_alpha_n=None,
                 min_density=None, max_density=None):
        if max_depth < 0:
            raise PreconditionError('max_depth must be non-negative')
        if max_features_node < 1:
            raise PreconditionError('max_features_node must be positive')
        if min_node_points < 1:
            raise PreconditionError('min_node_points must be at least 1')
        if criterion not in CRITERIA:
            raise PreconditionError('unknown criterion %r' % (criterion,))
        if not gamma > 0:
            raise PreconditionError('gamma must be positive')
        if criterion == NAIVE_OC_GINI and not (naive_alpha_n and naive_alpha_n > 0):
            raise PreconditionError('the naive criterion needs naive_alpha_n > 0')
        self.max_depth = int(max_depth)
        self.max_features_node = int(max_features_node)
        self.criterion = criterion
        self.gamma = float(gamma)
        self.min_node_points = int(min_node_points)
        if rng is None or isinstance(rng, (int, np.integer)):
            rng = np.random.default_rng(rng)
        self.rng = rng
        self.naive_alpha_n = naive_alpha_n
        self.min_density = min_density
        self.max_density = max_density


class _TreeGrower(object):

    def __init__(self, config, n_dims, root_cell):
        self.config = config
        self.n_dims = n_dims
        self.active = root_cell.widths > 0

    def _log_density(self, n_t, cell):
        log_volume = np.sum(np.log(cell.widths[self.active]))
        return math.log(n_t) - log_volume

    def _is_leaf(self, n_t, cell, depth):
        config = self.config
        if depth >= config.max_depth or n_t < config.min_node_points:
            return True
        if config.min_density is not None or config.max_density is not None:
            log_density = self._log_density(n_t, cell)
            if (config.min_density is not None
                    and log_density < math.log(config.min_density)):
                return True
            if (config.max_density is not None
                    and log_density > math.log(config.max_density)):
                return True
        return False

    def grow(self, X, cell, depth=0, log_volume_fraction=0.0):
        config = self.config
        n_t = len(X)
        if self._is_leaf(n_t, cell, depth):
            return TreeNode(cell, depth, n_t)

        # one draw per visited node, in pre-order
        candidates = config.rng.choice(
            self.n_dims, size=min(config.max_features_node, self.n_dims),
            replace=False)
        best = find_best_split(X, cell, candidates,
                               criterion=config.criterion, gamma=config.gamma,
                               alpha_n=config.naive_alpha_n,
                               log_volume_fraction=log_volume_fraction)
        if best is None:
            return TreeNode(cell, depth, n_t)

        left_cell, right_cell = cell.split(best.feature, best.threshold)
        go_left = X[:, best.feature] < best.threshold
        left = self.grow(X[go_left], left_cell, depth + 1,
                         log_volume_fraction + math.log(best.lambda_left))
        right = self.grow(X[~go_left], right_cell, depth + 1,
                          log_volume_fraction + math.log(best.lambda_right))
        return TreeNode(cell, depth, n_t, best.feature, best.threshold,
                        left, right)


def grow_tree(X, config, feature_subset=None, subsample_size=None):
    """Grow a one-class tree on the rows of ``X``.

    Parameters
    ----------
    X : array-like, shape=(n_rows, n_dims)
        The tree's sub-sample, already restricted to its feature subset.
    config : GrowthConfig
    feature_subset : array-like of int, optional
        Global indices of the columns of ``X``; defaults to ``range(n_dims)``.

    Returns
    -------
    tree : OneClassTree
        Its root cell is the bounding box of ``X``.
    """
    X = array2d(X)
    if len(X) == 0 or X.shape[1] == 0:
        raise PreconditionError('cannot grow a tree on an empty sample')
    if feature_subset is None:
        feature_subset = np.arange(X.shape[1])

    root_cell = bounding_box(X)
    grower = _TreeGrower(config, X.shape[1], root_cell)
    root = grower.grow(X, root_cell)
    tree = OneClassTree(root, len(X) if subsample_size is None else subsample_size,
                        feature_subset)
    logger.debug('grew %r', tree)
    return tree


def node_split(node):
    """Rebuild the SplitEvaluation of an internal node from its cells.

    The proxy value is the one-class Gini proxy with gamma=1; use
    :func:`node_gain` for other values of gamma.
    """
    if node.is_leaf:
        return None
    lam = node.cell.lambda_left(node.split_feature, node.split_threshold)
    n_left = node.left.n_inliers
    return SplitEvaluation(node.split_feature, node.split_threshold, n_left,
                           node.n_inliers - n_left, lam,
                           oc_gini_proxy(node.n_inliers, n_left, lam, 1.0))


def node_gain(n_t, best, gamma=1.0):
    """One-class Gini impurity decrease achieved by a split.

    Parameters
    ----------
    n_t : int
        Inliers in the parent node.
    best : SplitEvaluation or None
        The split chosen for the node; None for a leaf.
    gamma : float

    Returns
    -------
    gain : float
        ``gamma n_t / (1 + gamma)`` minus the one-class Gini proxy of the
        split, clamped at 0.
    """
    if best is None or n_t < 1:
        return 0.0
    proxy = oc_gini_proxy(n_t, best.n_left, best.lambda_left, gamma)
    return max(0.0, proportional_baseline(n_t, gamma) - proxy)
