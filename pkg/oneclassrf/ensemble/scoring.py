# Author: oneclassrf developers
# Contributors:
# All rights reserved.

"""Scoring functions of a trained forest.

Three scores are available:

``depth``
    ``s(x) = 2 ** (-mean path measure / c(n))`` where the path measure of a
    tree is the depth of the leaf reached by ``x`` plus ``c(n_leaf)``, the
    average path length of an unbuilt subtree on ``n_leaf`` points. Higher
    is more abnormal.
``stepwise-density``
    Mean over trees of ``n_leaf / Leb(leaf cell)``. Lower is more abnormal.
``typical-cell``
    ``sum(n_leaf) / sum(Leb(leaf cell))`` over trees, the density of an
    average leaf. Lower is more abnormal.

Leaf volumes are only ever handled as logarithms, and over the coordinates
with positive width in each tree's root cell.
"""

#-----------------------------------------------------------------------------
# Imports
#-----------------------------------------------------------------------------

from __future__ import absolute_import, print_function, division

import enum

import numpy as np
import pandas as pd
from scipy.special import logsumexp

from ..exceptions import PreconditionError
from ..utils import check_points

__all__ = ['ScoreKind', 'harmonic_c', 'tree_path_measure', 'path_measures',
           'depth_score', 'stepwise_density', 'typical_cell_density',
           'score_samples', 'abnormality', 'score_grid', 'grid_bounds',
           'write_grid_csv']

#-----------------------------------------------------------------------------
# Code
#-----------------------------------------------------------------------------


class ScoreKind(enum.Enum):
    DEPTH = 'depth'
    STEPWISE_DENSITY = 'stepwise-density'
    TYPICAL_CELL = 'typical-cell'

    @property
    def higher_is_abnormal(self):
        return self is ScoreKind.DEPTH

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise PreconditionError(
                'unknown score kind %r, expected one of %s'
                % (value, ', '.join(k.value for k in cls)))


_harmonic = np.zeros(1)


def _harmonic_numbers(n_max):
    """Exact partial sums H(0..n_max), grown and cached on demand.

    Callers get the table they asked for even when another thread swaps
    the cache; the cache only ever grows.
    """
    global _harmonic
    table = _harmonic
    if n_max >= len(table):
        size = max(n_max + 1, 2 * len(table))
        table = np.concatenate([[0.0], np.cumsum(1.0 / np.arange(1, size))])
        if len(table) > len(_harmonic):
            _harmonic = table
    return table


def harmonic_c(n):
    """Average path length of an unsuccessful search in a binary tree of
    ``n`` points: ``c(1) = 0`` and ``c(n) = 2 H(n-1) - 2 (n-1) / n``.

    Parameters
    ----------
    n : int or array-like of int
        Must be >= 1.

    Returns
    -------
    c : float or np.ndarray
    """
    n_arr = np.asarray(n, dtype=np.int64)
    if np.any(n_arr < 1):
        raise PreconditionError('harmonic_c needs n >= 1')
    H = _harmonic_numbers(int(n_arr.max()) if n_arr.size else 1)
    c = 2.0 * H[n_arr - 1] - 2.0 * (n_arr - 1) / n_arr
    if n_arr.ndim == 0:
        return float(c)
    return c


def _c_or_zero(n_inliers):
    # empty leaves contribute no correction
    return harmonic_c(np.maximum(n_inliers, 1))


def tree_path_measure(tree, x):
    """``depth(leaf) + c(n_leaf)`` of the leaf reached by ``x``.

    Parameters
    ----------
    tree : OneClassTree
    x : array-like, shape=(n_features,) or (n_samples, n_features)
        Points in the training feature space.
    """
    n_features = int(np.max(tree.feature_subset)) + 1
    X = np.asarray(x, dtype=np.float64)
    single = X.ndim == 1
    X = np.atleast_2d(X)
    if X.shape[1] < n_features:
        raise PreconditionError('dimensionality mismatch: tree uses feature '
                                '%d, got %d features' % (n_features - 1,
                                                         X.shape[1]))
    leaf = tree.apply(X)
    arrays = tree.arrays
    measure = arrays['depth'][leaf] + _c_or_zero(arrays['n_inliers'][leaf])
    return float(measure[0]) if single else measure


def _leaf_stats(forest, X):
    leaves = [tree.apply(X) for tree in forest.trees]
    depth = np.array([t.arrays['depth'][l]
                      for t, l in zip(forest.trees, leaves)], dtype=np.float64)
    n_inliers = np.array([t.arrays['n_inliers'][l]
                          for t, l in zip(forest.trees, leaves)])
    log_volume = np.array([t.arrays['log_volume'][l]
                           for t, l in zip(forest.trees, leaves)])
    return depth, n_inliers, log_volume


def path_measures(forest, X):
    """Path measure of every point in every tree, shape (n_trees, n)."""
    X, _ = check_points(X, forest.train_dims)
    depth, n_inliers, _ = _leaf_stats(forest, X)
    return depth + _c_or_zero(n_inliers)


def _finish(values, single):
    return float(values[0]) if single else values


def depth_score(forest, X, log=False):
    """Depth based score, in (0, 1]; higher is more abnormal.

    Parameters
    ----------
    forest : Forest
    X : array-like, shape=(n_samples, n_features) or (n_features,)
    log : bool, default=False
        Return ``log2 s(x)`` instead of ``s(x)``.
    """
    X, single = check_points(X, forest.train_dims)
    mean = path_measures(forest, X).mean(axis=0)
    log2_score = -mean / harmonic_c(forest.subsample_size)
    return _finish(log2_score if log else np.exp2(log2_score), single)


def _log_densities(n_inliers, log_volume):
    with np.errstate(divide='ignore'):
        return np.log(n_inliers) - log_volume


def stepwise_density(forest, X, log=False):
    """Mean of ``n_leaf / Leb(leaf)`` over trees; lower is more abnormal.

    Points outside a tree's root cell get the density of the boundary leaf
    they are routed to.
    """
    X, single = check_points(X, forest.train_dims)
    _, n_inliers, log_volume = _leaf_stats(forest, X)
    log_density = (logsumexp(_log_densities(n_inliers, log_volume), axis=0)
                   - np.log(len(forest.trees)))
    return _finish(log_density if log else np.exp(log_density), single)


def typical_cell_density(forest, X, log=False):
    """``sum(n_leaf) / sum(Leb(leaf))`` over trees; lower is more abnormal."""
    X, single = check_points(X, forest.train_dims)
    _, n_inliers, log_volume = _leaf_stats(forest, X)
    total_log_volume = logsumexp(log_volume, axis=0)
    if np.any(np.isneginf(total_log_volume)):
        raise PreconditionError('leaf cells have zero total volume')
    with np.errstate(divide='ignore'):
        log_density = np.log(n_inliers.sum(axis=0)) - total_log_volume
    return _finish(log_density if log else np.exp(log_density), single)


_SCORERS = {
    ScoreKind.DEPTH: depth_score,
    ScoreKind.STEPWISE_DENSITY: stepwise_density,
    ScoreKind.TYPICAL_CELL: typical_cell_density,
}


def score_samples(forest, X, kind=ScoreKind.DEPTH):
    """Raw score of the given kind, in its own orientation."""
    return _SCORERS[ScoreKind.parse(kind)](forest, X)


def abnormality(forest, X, kind=ScoreKind.DEPTH):
    """A score where higher always means more abnormal.

    The depth score is returned as is; densities are turned into negative
    log densities, a strictly decreasing transform that keeps rankings and
    avoids underflow.
    """
    kind = ScoreKind.parse(kind)
    if kind.higher_is_abnormal:
        return _SCORERS[kind](forest, X)
    return -_SCORERS[kind](forest, X, log=True)


def grid_bounds(forest):
    """Union of the trees' root cells, as (lower, upper) arrays."""
    lower = np.full(forest.train_dims, np.inf)
    upper = np.full(forest.train_dims, -np.inf)
    for tree in forest.trees:
        cell = tree.root.cell
        lower[tree.feature_subset] = np.minimum(
            lower[tree.feature_subset], cell.lower)
        upper[tree.feature_subset] = np.maximum(
            upper[tree.feature_subset], cell.upper)
    return lower, upper


def score_grid(forest, kind=ScoreKind.DEPTH, bounds=None, resolution=(100, 100)):
    """Evaluate a score on the centers of a regular 2D grid.

    Parameters
    ----------
    forest : Forest
        Must have been trained on exactly two features.
    kind : ScoreKind or str
    bounds : Cell or (lower, upper), optional
        Defaults to the union of the trees' root cells.
    resolution : (int, int)
        Number of cells along x and y.

    Returns
    -------
    grid : pd.DataFrame
        Columns ``x``, ``y``, ``score``; y is the slow index and x the fast
        one.
    """
    if forest.train_dims != 2:
        raise PreconditionError('score_grid requires d=2, model has d=%d'
                                % forest.train_dims)
    nx, ny = (int(r) for r in resolution)
    if nx < 1 or ny < 1:
        raise PreconditionError('resolution must be positive')
    if bounds is None:
        lower, upper = grid_bounds(forest)
    elif hasattr(bounds, 'lower'):
        lower, upper = bounds.lower, bounds.upper
    else:
        lower, upper = (np.asarray(b, dtype=np.float64) for b in bounds)
    if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
        raise PreconditionError('grid bounds must be finite')

    xs = lower[0] + (np.arange(nx) + 0.5) * (upper[0] - lower[0]) / nx
    ys = lower[1] + (np.arange(ny) + 0.5) * (upper[1] - lower[1]) / ny
    gy, gx = np.meshgrid(ys, xs, indexing='ij')
    points = np.column_stack([gx.ravel(), gy.ravel()])
    scores = score_samples(forest, points, kind)
    return pd.DataFrame({'x': points[:, 0], 'y': points[:, 1],
                         'score': scores}, columns=['x', 'y', 'score'])


def write_grid_csv(grid, fn):
    grid.to_csv(fn, index=False, float_format='%.9g')
