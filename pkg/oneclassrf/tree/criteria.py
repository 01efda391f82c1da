# Author: oneclassrf developers
# Contributors:
# All rights reserved.
"""Impurity proxies used to choose the splits of one-class trees.

Every proxy here is *minimized*: a smaller value means a larger impurity
decrease. The one-class proxies replace the (unobserved) outlier counts of
the classical two-class proxy by the number of uniform outliers one would
expect in each child. In the adaptive versions the node is assumed to
contain ``gamma * n_t`` such outliers, whatever its volume; in the naive
version a fixed budget ``alpha_n`` is spread uniformly over the root cell,
which starves small nodes of outliers.

All functions accept scalars or numpy arrays (broadcast elementwise) and
use the convention ``0 * x / (0 + x) := 0`` for empty children.
"""

from __future__ import absolute_import, print_function, division

import numpy as np

from ..exceptions import PreconditionError

__all__ = ['OC_GINI', 'OC_SHANNON', 'NAIVE_OC_GINI', 'RANDOM', 'CRITERIA',
           'SplitEvaluation', 'AdaptiveModelParams', 'two_class_gini_proxy',
           'oc_gini_proxy', 'oc_shannon_proxy', 'naive_oc_gini_proxy',
           'class_ratio_naive', 'adaptive_model_params',
           'oc_adaptive_proxy_general', 'proportional_baseline',
           'find_best_split']

OC_GINI = 'oc-gini'
OC_SHANNON = 'oc-shannon'
NAIVE_OC_GINI = 'naive'
# Not a criterion: marks isolation trees, whose splits are drawn at random.
RANDOM = 'random'
CRITERIA = (OC_GINI, OC_SHANNON, NAIVE_OC_GINI)

#-----------------------------------------------------------------------------
# Types
#-----------------------------------------------------------------------------


class SplitEvaluation(object):
    """A candidate split together with its proxy value.

    Attributes
    ----------
    feature : int
        Split coordinate (position in the node cell).
    threshold : float
        Split value; ``x[feature] < threshold`` goes left.
    n_left, n_right : int
        Inliers on each side.
    lambda_left, lambda_right : float
        Volume fractions of the children within the node, in (0, 1).
    proxy_value : float
        Value of the criterion being minimized.
    """

    __slots__ = ('feature', 'threshold', 'n_left', 'n_right', 'lambda_left',
                 'lambda_right', 'proxy_value')

    def __init__(self, feature, threshold, n_left, n_right, lambda_left,
                 proxy_value):
        self.feature = int(feature)
        self.threshold = float(threshold)
        self.n_left = int(n_left)
        self.n_right = int(n_right)
        self.lambda_left = float(lambda_left)
        self.lambda_right = 1.0 - self.lambda_left
        self.proxy_value = float(proxy_value)

    @property
    def n_total(self):
        return self.n_left + self.n_right

    def __repr__(self):
        return ('SplitEvaluation(feature=%d, threshold=%r, n_left=%d, '
                'n_right=%d, lambda_left=%.6g, proxy_value=%.6g)' % (
                    self.feature, self.threshold, self.n_left, self.n_right,
                    self.lambda_left, self.proxy_value))


class AdaptiveModelParams(object):
    """Node-level parameters of the adaptive one-class model.

    Attributes
    ----------
    alpha_of_Lt : float
        Outlier proportion of the model adapted to the node, in (0, 1).
    n_of_Lt : float
        Total sample size of the model adapted to the node.
    """

    __slots__ = ('alpha_of_Lt', 'n_of_Lt')

    def __init__(self, alpha_of_Lt, n_of_Lt):
        self.alpha_of_Lt = float(alpha_of_Lt)
        self.n_of_Lt = float(n_of_Lt)

    @property
    def expected_outliers_density(self):
        """alpha(L_t) * n(L_t), the expected outlier count per unit L."""
        return self.alpha_of_Lt * self.n_of_Lt

    def __repr__(self):
        return 'AdaptiveModelParams(alpha_of_Lt=%r, n_of_Lt=%r)' % (
            self.alpha_of_Lt, self.n_of_Lt)

#-----------------------------------------------------------------------------
# Proxies
#-----------------------------------------------------------------------------


def _output(value):
    value = np.asarray(value, dtype=np.float64)
    if value.ndim == 0:
        return float(value)
    return value


def _ratio_term(a, b):
    # a * b / (a + b), with 0 where both are 0
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    denom = a + b
    out = np.zeros(np.broadcast(a, b).shape)
    np.divide(a * b, denom, out=out, where=denom > 0)
    return out


def _entropy_term(n, m):
    # n * log2((n + m) / n), with 0 where n is 0
    n = np.asarray(n, dtype=np.float64)
    m = np.asarray(m, dtype=np.float64)
    out = np.zeros(np.broadcast(n, m).shape)
    ratio = np.ones_like(out)
    np.divide(n + m, n, out=ratio, where=n > 0)
    np.multiply(n, np.log2(ratio), out=out, where=n > 0)
    return out


def _check_one_class_args(n_t, n_left, lambda_left, gamma):
    n_t = np.asarray(n_t, dtype=np.float64)
    n_left = np.asarray(n_left, dtype=np.float64)
    lambda_left = np.asarray(lambda_left, dtype=np.float64)
    if np.any(lambda_left <= 0) or np.any(lambda_left >= 1):
        raise PreconditionError('lambda_left must lie in the open interval '
                                '(0, 1)')
    if np.any(n_t < 1):
        raise PreconditionError('n_t must be at least 1')
    if np.any(n_left < 0) or np.any(n_left > n_t):
        raise PreconditionError('n_left must lie in [0, n_t]')
    if not np.all(np.asarray(gamma) > 0):
        raise PreconditionError('gamma must be positive')
    return n_t, n_left, lambda_left


def two_class_gini_proxy(n_left, n_left_prime, n_right, n_right_prime):
    """Two-class proxy of the Gini impurity decrease.

    Parameters
    ----------
    n_left, n_right : int or array-like
        Inlier (first class) counts in each child.
    n_left_prime, n_right_prime : int or array-like
        Outlier (second class) counts in each child.

    Returns
    -------
    proxy : float or np.ndarray
        ``n_L n'_L / (n_L + n'_L) + n_R n'_R / (n_R + n'_R)``.
    """
    return _output(_ratio_term(n_left, n_left_prime)
                   + _ratio_term(n_right, n_right_prime))


def _oc_gini(n_t, n_left, lambda_left, gamma):
    outliers = gamma * n_t
    return (_ratio_term(n_left, outliers * lambda_left)
            + _ratio_term(n_t - n_left, outliers * (1.0 - lambda_left)))


def _oc_shannon(n_t, n_left, lambda_left, gamma):
    outliers = gamma * n_t
    return (_entropy_term(n_left, outliers * lambda_left)
            + _entropy_term(n_t - n_left, outliers * (1.0 - lambda_left)))


def oc_gini_proxy(n_t, n_left, lambda_left, gamma=1.0):
    """One-class adaptive Gini proxy.

    The node is assumed to hide ``gamma * n_t`` uniform outliers, so each
    child receives ``gamma * n_t * lambda`` of them in expectation.

    Parameters
    ----------
    n_t : int or array-like
        Inliers in the node, >= 1.
    n_left : int or array-like
        Inliers sent left, in [0, n_t].
    lambda_left : float or array-like
        Volume fraction of the left child, in (0, 1).
    gamma : float
        Ratio of hidden outliers to inliers in every node.

    Returns
    -------
    proxy : float or np.ndarray
        Always <= ``gamma * n_t / (1 + gamma)``, with equality when
        ``lambda_left == n_left / n_t``.
    """
    n_t, n_left, lambda_left = _check_one_class_args(n_t, n_left,
                                                     lambda_left, gamma)
    return _output(_oc_gini(n_t, n_left, lambda_left, gamma))


def oc_shannon_proxy(n_t, n_left, lambda_left, gamma=1.0):
    """One-class adaptive Shannon (entropy) proxy.

    Same arguments as :func:`oc_gini_proxy`; returns
    ``n_L log2((n_L + g n_t l_L) / n_L) + n_R log2((n_R + g n_t l_R) / n_R)``.
    """
    n_t, n_left, lambda_left = _check_one_class_args(n_t, n_left,
                                                     lambda_left, gamma)
    return _output(_oc_shannon(n_t, n_left, lambda_left, gamma))


def naive_oc_gini_proxy(alpha_n, n_left, n_right, L_left, L_right):
    """Naive one-class Gini proxy with a global outlier budget.

    Parameters
    ----------
    alpha_n : float
        Total number of hidden outliers spread uniformly on the root cell.
    n_left, n_right : int or array-like
        Inliers in each child.
    L_left, L_right : float or array-like
        Child volumes as fractions of the *root* cell volume.

    Notes
    -----
    Every term is bounded by its ``alpha_n * L`` factor, so the proxy never
    exceeds ``alpha_n * L_t``: once nodes are small it cannot tell splits
    apart any more.
    """
    if not alpha_n > 0:
        raise PreconditionError('alpha_n must be positive')
    L_left = np.asarray(L_left, dtype=np.float64)
    L_right = np.asarray(L_right, dtype=np.float64)
    if np.any(L_left < 0) or np.any(L_right < 0):
        raise PreconditionError('volume fractions must be non-negative')
    return _output(_ratio_term(n_left, alpha_n * L_left)
                   + _ratio_term(n_right, alpha_n * L_right))


def class_ratio_naive(alpha_n, L_t, n_t):
    """Outlier to inlier ratio ``alpha_n * L_t / n_t`` of a node under the
    naive model."""
    if np.any(np.asarray(n_t) < 1):
        raise PreconditionError('n_t must be at least 1')
    return _output(np.asarray(alpha_n, dtype=np.float64) * L_t
                   / np.asarray(n_t, dtype=np.float64))


def adaptive_model_params(alpha, n, L_t, n_t_prime):
    """Adapt the global one-class model to a node of relative volume L_t.

    The adapted model keeps the number of inliers, ``(1 - alpha) n``, and
    puts ``n_t_prime`` expected outliers in the node.

    Parameters
    ----------
    alpha : float
        Global outlier proportion, in (0, 1).
    n : float
        Global sample size.
    L_t : float
        Node volume as a fraction of the root cell volume, > 0.
    n_t_prime : float
        Expected outliers in the node (``gamma * n_t``), > 0.

    Returns
    -------
    params : AdaptiveModelParams
        ``alpha(L_t) = n'_t / ((1 - alpha) n L_t + n'_t)`` and
        ``n(L_t) = ((1 - alpha) n L_t + n'_t) / L_t``.
    """
    if not 0 < alpha < 1:
        raise PreconditionError('alpha must lie in (0, 1)')
    if not L_t > 0:
        raise PreconditionError('L_t must be positive')
    if not n_t_prime > 0:
        raise PreconditionError('n_t_prime must be positive')
    mass = (1.0 - alpha) * n * L_t + n_t_prime
    return AdaptiveModelParams(alpha_of_Lt=n_t_prime / mass,
                               n_of_Lt=mass / L_t)


def oc_adaptive_proxy_general(n_left, n_right, params, L_left, L_right):
    """Naive-form proxy evaluated under the node-adapted model.

    Equal to :func:`oc_gini_proxy` with ``lambda_left = L_left / L_t`` when
    ``params`` comes from :func:`adaptive_model_params`.
    """
    density = params.expected_outliers_density
    return _output(_ratio_term(n_left, density * np.asarray(L_left, dtype=np.float64))
                   + _ratio_term(n_right, density * np.asarray(L_right, dtype=np.float64)))


def proportional_baseline(n_t, gamma=1.0):
    """Value of the one-class Gini proxy at a proportional split,
    ``gamma * n_t / (1 + gamma)``; an upper bound for every split."""
    return gamma * n_t / (1.0 + gamma)

#-----------------------------------------------------------------------------
# Split search
#-----------------------------------------------------------------------------


def _candidate_thresholds(values, lo, hi):
    distinct = np.unique(values)
    if len(distinct) < 2:
        return np.empty(0)
    thresholds = np.unique(0.5 * (distinct[:-1] + distinct[1:]))
    return thresholds[(thresholds > lo) & (thresholds < hi)]


def find_best_split(X, cell, candidate_features, criterion=OC_GINI,
                    gamma=1.0, alpha_n=None, log_volume_fraction=0.0):
    """Exhaustive search of the split minimizing a one-class proxy.

    Thresholds are the midpoints between consecutive distinct values of each
    candidate feature within the node.

    Parameters
    ----------
    X : np.ndarray, shape=(n_t, n_dims)
        Inliers in the node, in the coordinates of ``cell``.
    cell : Cell
        The node cell.
    candidate_features : array-like of int
        Coordinates to search; must be non-empty.
    criterion : {'oc-gini', 'oc-shannon', 'naive'}
        Proxy to minimize.
    gamma : float
        Outlier to inlier ratio of the adaptive criteria.
    alpha_n : float, optional
        Outlier budget, required by the naive criterion.
    log_volume_fraction : float
        ``log(L_t)``, the node volume relative to the root cell, used by the
        naive criterion only.

    Returns
    -------
    best : SplitEvaluation or None
        None when no candidate feature admits a threshold. Ties go to the
        lowest feature index, then the lowest threshold.
    """
    candidate_features = np.unique(np.asarray(candidate_features, dtype=np.intp))
    if len(candidate_features) == 0:
        raise PreconditionError('candidate_features must be non-empty')
    if criterion not in CRITERIA:
        raise PreconditionError('unknown criterion %r' % (criterion,))
    if criterion == NAIVE_OC_GINI and (alpha_n is None or not alpha_n > 0):
        raise PreconditionError('the naive criterion needs alpha_n > 0')

    X = np.asarray(X, dtype=np.float64)
    n_t = len(X)
    best = None
    if n_t < 2:
        return best

    for feature in candidate_features:
        lo, hi = cell.lower[feature], cell.upper[feature]
        if not hi > lo:
            continue
        values = np.sort(X[:, feature])
        thresholds = _candidate_thresholds(values, lo, hi)
        if len(thresholds) == 0:
            continue
        lam = (thresholds - lo) / (hi - lo)
        keep = (lam > 0) & (lam < 1)
        thresholds, lam = thresholds[keep], lam[keep]
        if len(thresholds) == 0:
            continue
        n_left = np.searchsorted(values, thresholds, side='left')

        if criterion == OC_GINI:
            proxy = _oc_gini(n_t, n_left, lam, gamma)
        elif criterion == OC_SHANNON:
            proxy = _oc_shannon(n_t, n_left, lam, gamma)
        else:
            L_t = np.exp(log_volume_fraction)
            proxy = (_ratio_term(n_left, alpha_n * L_t * lam)
                     + _ratio_term(n_t - n_left, alpha_n * L_t * (1.0 - lam)))

        i = int(np.argmin(proxy))
        if best is None or proxy[i] < best.proxy_value:
            best = SplitEvaluation(feature, thresholds[i], n_left[i],
                                   n_t - n_left[i], lam[i], proxy[i])
    return best
