# Author: oneclassrf developers
# Contributors:
# All rights reserved.

#-----------------------------------------------------------------------------
# Imports
#-----------------------------------------------------------------------------

from __future__ import absolute_import, print_function, division

import numpy as np

from .cell import Cell
from ..exceptions import PreconditionError

__all__ = ['TreeNode', 'OneClassTree', 'LEAF']

LEAF = -1

#-----------------------------------------------------------------------------
# Code
#-----------------------------------------------------------------------------


class TreeNode(object):
    """A node of a one-class tree.

    Parameters
    ----------
    cell : Cell
        The hyper-rectangle covered by this node.
    depth : int
        Distance from the root (the root has depth 0).
    n_inliers : int
        Number of training points that fell in this node.
    split_feature : int or None
        Coordinate of ``cell`` the node splits on; None for a leaf.
    split_threshold : float or None
        Points with ``x[split_feature] < split_threshold`` go left.
    left, right : TreeNode or None
        Children of an internal node.
    """

    __slots__ = ('cell', 'depth', 'n_inliers', 'split_feature',
                 'split_threshold', 'left', 'right')

    def __init__(self, cell, depth, n_inliers, split_feature=None,
                 split_threshold=None, left=None, right=None):
        self.cell = cell
        self.depth = int(depth)
        self.n_inliers = int(n_inliers)
        self.split_feature = None if split_feature is None else int(split_feature)
        self.split_threshold = (None if split_threshold is None
                                else float(split_threshold))
        self.left = left
        self.right = right
        if self.split_feature is not None:
            self._check_internal()
        elif left is not None or right is not None:
            raise PreconditionError('a leaf cannot have children')

    def _check_internal(self):
        m, c = self.split_feature, self.split_threshold
        if self.left is None or self.right is None:
            raise PreconditionError('an internal node needs two children')
        if not self.cell.lower[m] < c < self.cell.upper[m]:
            raise PreconditionError('split threshold must lie strictly '
                                    'inside the cell')
        left_cell, right_cell = self.cell.split(m, c)
        if left_cell != self.left.cell or right_cell != self.right.cell:
            raise PreconditionError('children cells do not partition the '
                                    'parent cell')
        if self.left.n_inliers + self.right.n_inliers != self.n_inliers:
            raise PreconditionError('children counts do not add up')
        if self.left.depth != self.depth + 1 or self.right.depth != self.depth + 1:
            raise PreconditionError('children must be one level deeper')

    @property
    def is_leaf(self):
        return self.split_feature is None

    def __repr__(self):
        if self.is_leaf:
            return 'TreeNode(leaf, depth=%d, n_inliers=%d)' % (
                self.depth, self.n_inliers)
        return 'TreeNode(x[%d] < %r, depth=%d, n_inliers=%d)' % (
            self.split_feature, self.split_threshold, self.depth,
            self.n_inliers)


class OneClassTree(object):
    """A trained one-class tree.

    Parameters
    ----------
    root : TreeNode
        Root node, depth 0.
    subsample_size : int
        Number of training rows the tree was grown on.
    feature_subset : array-like of int
        Indices (into the training feature matrix) of the features this tree
        uses. Node split features and cell coordinates are positions in this
        list.

    Notes
    -----
    Nodes are numbered in pre-order (node, left subtree, right subtree).
    The same numbering is used by :meth:`apply` and by the model file.
    """

    def __init__(self, root, subsample_size, feature_subset):
        if root.depth != 0:
            raise PreconditionError('the root node must have depth 0')
        feature_subset = np.array(feature_subset, dtype=np.intp).reshape(-1)
        if len(feature_subset) != root.cell.n_dims:
            raise PreconditionError('feature_subset does not match the root '
                                    'cell dimensionality')
        feature_subset.flags.writeable = False
        self.root = root
        self.subsample_size = int(subsample_size)
        self.feature_subset = feature_subset
        self._arrays = None

    def iter_nodes(self):
        """Iterate over nodes in pre-order."""
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            if not node.is_leaf:
                stack.append(node.right)
                stack.append(node.left)

    def leaves(self):
        return [node for node in self.iter_nodes() if node.is_leaf]

    @property
    def n_nodes(self):
        return len(self.arrays['feature'])

    @property
    def max_leaf_depth(self):
        return int(self.arrays['depth'].max())

    @property
    def active_dims(self):
        """Coordinates with positive width in the root cell.

        Constant features of the sub-sample give the root a zero width along
        them; volumes are measured over the remaining coordinates.
        """
        return self.root.cell.widths > 0

    @property
    def arrays(self):
        """Flat pre-order arrays describing the tree (built lazily).

        Keys are ``feature`` (LEAF for leaves), ``threshold``, ``left``,
        ``right``, ``depth``, ``n_inliers``, ``lower``, ``upper`` and
        ``log_volume`` (over :attr:`active_dims`).
        """
        if self._arrays is None:
            self._arrays = self._compile()
        return self._arrays

    def _compile(self):
        nodes = list(self.iter_nodes())
        index = {id(node): i for i, node in enumerate(nodes)}
        n = len(nodes)
        feature = np.full(n, LEAF, dtype=np.intp)
        threshold = np.full(n, np.nan)
        left = np.full(n, LEAF, dtype=np.intp)
        right = np.full(n, LEAF, dtype=np.intp)
        depth = np.empty(n, dtype=np.intp)
        n_inliers = np.empty(n, dtype=np.int64)
        lower = np.empty((n, self.root.cell.n_dims))
        upper = np.empty((n, self.root.cell.n_dims))
        for i, node in enumerate(nodes):
            depth[i] = node.depth
            n_inliers[i] = node.n_inliers
            lower[i] = node.cell.lower
            upper[i] = node.cell.upper
            if not node.is_leaf:
                feature[i] = node.split_feature
                threshold[i] = node.split_threshold
                left[i] = index[id(node.left)]
                right[i] = index[id(node.right)]

        active = self.active_dims
        with np.errstate(divide='ignore'):
            log_volume = np.log(upper[:, active] - lower[:, active]).sum(axis=1)

        arrays = dict(feature=feature, threshold=threshold, left=left,
                      right=right, depth=depth, n_inliers=n_inliers,
                      lower=lower, upper=upper, log_volume=log_volume)
        for value in arrays.values():
            value.flags.writeable = False
        return arrays

    def apply(self, X):
        """Index of the leaf reached by each row of ``X``.

        Parameters
        ----------
        X : np.ndarray, shape=(n_samples, n_features)
            Points in the *training* feature space; the tree picks its own
            columns. Traversal only compares thresholds, so points outside
            the root cell still reach a (boundary) leaf.

        Returns
        -------
        leaves : np.ndarray of int, shape=(n_samples,)
            Pre-order node indices.
        """
        arrays = self.arrays
        Xs = np.asarray(X, dtype=np.float64)[:, self.feature_subset]
        node = np.zeros(len(Xs), dtype=np.intp)
        while True:
            internal = np.nonzero(arrays['feature'][node] != LEAF)[0]
            if len(internal) == 0:
                return node
            current = node[internal]
            go_left = (Xs[internal, arrays['feature'][current]]
                       < arrays['threshold'][current])
            node[internal] = np.where(go_left, arrays['left'][current],
                                      arrays['right'][current])

    def __repr__(self):
        return 'OneClassTree(n_nodes=%d, subsample_size=%d, n_features=%d)' % (
            self.n_nodes, self.subsample_size, len(self.feature_subset))
