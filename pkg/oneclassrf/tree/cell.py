# Author: oneclassrf developers
# Contributors:
# All rights reserved.

#-----------------------------------------------------------------------------
# Imports
#-----------------------------------------------------------------------------

from __future__ import absolute_import, print_function, division

import numpy as np

from ..exceptions import PreconditionError

__all__ = ['Cell', 'cell_volume', 'split_cell', 'bounding_box']

#-----------------------------------------------------------------------------
# Code
#-----------------------------------------------------------------------------


class Cell(object):
    """Axis-aligned hyper-rectangle attached to a tree node.

    Parameters
    ----------
    lower : array-like, shape=(n_dims,)
        Per-feature lower bounds.
    upper : array-like, shape=(n_dims,)
        Per-feature upper bounds.

    Notes
    -----
    The bounds are stored as read-only float64 arrays, so a Cell can be
    shared between threads once built. Volumes of deep cells in high
    dimension underflow, which is why the builder and the density scores
    work with :attr:`log_volume` and never with :func:`cell_volume`.
    """

    __slots__ = ('lower', 'upper')

    def __init__(self, lower, upper):
        lower = np.array(lower, dtype=np.float64).reshape(-1)
        upper = np.array(upper, dtype=np.float64).reshape(-1)
        if lower.shape != upper.shape:
            raise PreconditionError('lower and upper must have the same shape')
        if len(lower) == 0:
            raise PreconditionError('a cell needs at least one dimension')
        if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
            raise PreconditionError('cell bounds must be finite')
        if np.any(lower > upper):
            raise PreconditionError('cell has lower[j] > upper[j]')
        lower.flags.writeable = False
        upper.flags.writeable = False
        self.lower = lower
        self.upper = upper

    @property
    def n_dims(self):
        return len(self.lower)

    @property
    def widths(self):
        return self.upper - self.lower

    @property
    def volume(self):
        return cell_volume(self)

    @property
    def log_volume(self):
        """Sum of the log widths; -inf for a degenerate cell."""
        with np.errstate(divide='ignore'):
            return float(np.sum(np.log(self.widths)))

    def contains(self, x):
        x = np.asarray(x, dtype=np.float64)
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))

    def lambda_left(self, feature, threshold):
        """Fraction of the volume that falls left of ``threshold``.

        Only the split coordinate changes between a cell and its left child,
        so the ratio is computed from that coordinate alone.
        """
        lo, hi = self.lower[feature], self.upper[feature]
        return (threshold - lo) / (hi - lo)

    def split(self, feature, threshold):
        return split_cell(self, feature, threshold)

    def __eq__(self, other):
        return (isinstance(other, Cell)
                and np.array_equal(self.lower, other.lower)
                and np.array_equal(self.upper, other.upper))

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return 'Cell(lower=%r, upper=%r)' % (self.lower.tolist(),
                                             self.upper.tolist())


def cell_volume(cell):
    """Lebesgue volume of a cell, the product of its widths.

    Parameters
    ----------
    cell : Cell

    Returns
    -------
    volume : float
        Non-negative; exactly 0.0 when some feature has zero width.
    """
    return float(np.prod(cell.widths))


def split_cell(cell, feature, threshold):
    """Cut ``cell`` in two along ``feature`` at ``threshold``.

    Parameters
    ----------
    cell : Cell
    feature : int
        Coordinate to split on.
    threshold : float
        Must satisfy ``lower[feature] < threshold < upper[feature]``.

    Returns
    -------
    left, right : Cell
        ``left.upper[feature] == threshold == right.lower[feature]``.
    """
    feature = int(feature)
    if not 0 <= feature < cell.n_dims:
        raise PreconditionError('feature %d out of range for a %d-d cell'
                                % (feature, cell.n_dims))
    lo, hi = cell.lower[feature], cell.upper[feature]
    if not lo < threshold < hi:
        raise PreconditionError(
            'threshold %r outside the open interval (%r, %r) of feature %d'
            % (threshold, lo, hi, feature))

    left_upper = cell.upper.copy()
    left_upper[feature] = threshold
    right_lower = cell.lower.copy()
    right_lower[feature] = threshold
    return Cell(cell.lower, left_upper), Cell(right_lower, cell.upper)


def bounding_box(X):
    """The smallest cell containing every row of ``X``."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or len(X) == 0:
        raise PreconditionError('bounding_box needs a non-empty 2D array')
    return Cell(X.min(axis=0), X.max(axis=0))
