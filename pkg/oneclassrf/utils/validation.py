from __future__ import print_function, division, absolute_import
import numpy as np

from ..exceptions import PreconditionError

__all__ = ['array2d', 'check_points', 'check_binary_labels']


def array2d(X, dtype=np.float64, order=None, copy=False, force_all_finite=True):
    """Returns at least 2-d array with data from X"""
    X_2d = np.asarray(np.atleast_2d(X), dtype=dtype, order=order)
    if X_2d.ndim != 2:
        raise ValueError("Bad input shape %s, expected a 2D array"
                         % str(X_2d.shape))
    if force_all_finite:
        _assert_all_finite(X_2d)
    if X is X_2d and copy:
        X_2d = _safe_copy(X_2d)
    return X_2d


def check_points(X, n_features):
    """Coerce ``X`` into an (n_samples, n_features) float array.

    A single point of shape (n_features,) is promoted to a one row matrix.

    Parameters
    ----------
    X : array-like, shape=(n_samples, n_features) or (n_features,)
        Points to score.
    n_features : int
        Dimensionality the model was trained on.

    Returns
    -------
    X : np.ndarray, shape=(n_samples, n_features)
    single : bool
        True when the input was a single 1D point.
    """
    X = np.asarray(X, dtype=np.float64)
    single = X.ndim == 1
    X = array2d(X)
    if X.shape[1] != n_features:
        raise PreconditionError(
            "dimensionality mismatch: model has %d features, got %d"
            % (n_features, X.shape[1]))
    return X, single


def check_binary_labels(y, n_samples=None):
    """Check that ``y`` is a vector of {0, 1} labels (1 = outlier)."""
    y = np.asarray(y)
    if y.ndim != 1:
        raise ValueError("labels must be 1D, got shape %s" % str(y.shape))
    if n_samples is not None and len(y) != n_samples:
        raise ValueError("expected %d labels, got %d" % (n_samples, len(y)))
    if not np.all(np.isin(y, (0, 1))):
        raise ValueError("labels must be 0 (inlier) or 1 (outlier)")
    return y.astype(np.int64)


def _assert_all_finite(X):
    """Like assert_all_finite, but only for ndarray."""
    X = np.asanyarray(X)
    if (X.dtype.char in np.typecodes['AllFloat'] and not np.isfinite(X.sum())
            and not np.isfinite(X).all()):
        raise ValueError("Input contains NaN, infinity"
                         " or a value too large for %r." % X.dtype)


def _safe_copy(X):
    # Copy, but keep the order
    return np.copy(X, order='K')
