# Author: oneclassrf developers
# Contributors:
# All rights reserved.

from __future__ import absolute_import, print_function, division

import math
import numbers

from ..exceptions import PreconditionError
from ..tree.criteria import CRITERIA, RANDOM, OC_GINI, NAIVE_OC_GINI

__all__ = ['HyperParams', 'parse_count_or_fraction']

# max_samples and max_features_tree are absolute overrides of the
# fraction/floor rules; max_depth=None means ceil(log2(subsample size)).
_FIELDS = ('max_samples_fraction', 'max_samples_floor', 'max_samples',
           'max_features_tree_fraction', 'max_features_tree_floor',
           'max_features_tree', 'max_features_node', 'gamma', 'max_depth',
           'n_trees', 'criterion', 'naive_alpha_n', 'min_samples_split',
           'min_density', 'max_density', 'seed')


class HyperParams(object):
    """Hyperparameters of a one-class forest.

    By default each tree sees 20% of the rows (at least 100) and 50% of the
    features (at least 5) and searches 5 features per node. Every node is
    assumed to hide as many outliers as inliers (``gamma=1``). The forest
    has 100 trees.

    Parameters
    ----------
    max_samples_fraction : float, default=0.2
    max_samples_floor : int, default=100
        At least 2.
    max_samples : int, optional
        Absolute number of rows per tree; overrides the two fields above.
    max_features_tree_fraction : float, default=0.5
    max_features_tree_floor : int, default=5
    max_features_tree : int, optional
        Absolute number of features per tree; overrides the two fields above.
    max_features_node : int, default=5
    gamma : float, default=1.0
    max_depth : int, optional
        Defaults to ``ceil(log2(rows per tree))``.
    n_trees : int, default=100
    criterion : {'oc-gini', 'oc-shannon', 'naive', 'random'}
        'random' marks isolation forests.
    naive_alpha_n : float, optional
        Outlier budget of the 'naive' criterion.
    min_samples_split : int, default=2
        Nodes with fewer inliers are leaves.
    min_density, max_density : float, optional
        Density based stopping rules, off by default.
    seed : int, default=0
        Master seed, an unsigned 64-bit integer.
    """

    def __init__(self, max_samples_fraction=0.2, max_samples_floor=100,
                 max_samples=None, max_features_tree_fraction=0.5,
                 max_features_tree_floor=5, max_features_tree=None,
                 max_features_node=5, gamma=1.0, max_depth=None, n_trees=100,
                 criterion=OC_GINI, naive_alpha_n=None, min_samples_split=2,
                 min_density=None, max_density=None, seed=0):
        self.max_samples_fraction = float(max_samples_fraction)
        self.max_samples_floor = int(max_samples_floor)
        self.max_samples = None if max_samples is None else int(max_samples)
        self.max_features_tree_fraction = float(max_features_tree_fraction)
        self.max_features_tree_floor = int(max_features_tree_floor)
        self.max_features_tree = (None if max_features_tree is None
                                  else int(max_features_tree))
        self.max_features_node = int(max_features_node)
        self.gamma = float(gamma)
        self.max_depth = None if max_depth is None else int(max_depth)
        self.n_trees = int(n_trees)
        self.criterion = criterion
        self.naive_alpha_n = (None if naive_alpha_n is None
                              else float(naive_alpha_n))
        self.min_samples_split = int(min_samples_split)
        self.min_density = None if min_density is None else float(min_density)
        self.max_density = None if max_density is None else float(max_density)
        self.seed = int(seed)
        self.validate()

    def validate(self):
        if not 0 < self.max_samples_fraction <= 1:
            raise PreconditionError('max_samples_fraction must lie in (0, 1]')
        if not 0 < self.max_features_tree_fraction <= 1:
            raise PreconditionError('max_features_tree_fraction must lie in '
                                    '(0, 1]')
        for name in ('max_features_tree_floor', 'max_features_node', 'n_trees',
                     'min_samples_split'):
            if getattr(self, name) < 1:
                raise PreconditionError('%s must be a positive integer' % name)
        for name in ('max_features_tree', 'max_depth'):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise PreconditionError('%s must be a positive integer' % name)
        # depth scores are normalized by c(rows per tree), which is 0 for 1 row
        if self.max_samples_floor < 2 or (self.max_samples is not None
                                          and self.max_samples < 2):
            raise PreconditionError('trees need at least 2 rows each')
        if not self.gamma > 0:
            raise PreconditionError('gamma must be positive')
        if self.criterion not in CRITERIA + (RANDOM,):
            raise PreconditionError('unknown criterion %r' % (self.criterion,))
        if self.criterion == NAIVE_OC_GINI and not (
                self.naive_alpha_n is not None and self.naive_alpha_n > 0):
            raise PreconditionError('the naive criterion needs naive_alpha_n > 0')
        if not 0 <= self.seed < 2 ** 64:
            raise PreconditionError('seed must be an unsigned 64-bit integer')

    def subsample_size(self, n_rows):
        """Rows drawn for each tree out of ``n_rows``."""
        if self.max_samples is not None:
            return min(self.max_samples, n_rows)
        return max(int(math.ceil(self.max_samples_fraction * n_rows)),
                   min(self.max_samples_floor, n_rows))

    def n_tree_features(self, n_features):
        """Features drawn for each tree out of ``n_features``."""
        if self.max_features_tree is not None:
            return min(self.max_features_tree, n_features)
        return max(int(math.ceil(self.max_features_tree_fraction * n_features)),
                   min(self.max_features_tree_floor, n_features))

    def depth_cap(self, subsample_size):
        if self.max_depth is not None:
            return self.max_depth
        return int(math.ceil(math.log2(subsample_size)))

    def to_dict(self):
        return dict((name, getattr(self, name)) for name in _FIELDS)

    @classmethod
    def from_dict(cls, dct):
        unknown = set(dct) - set(_FIELDS)
        if unknown:
            raise PreconditionError('unknown hyperparameters: %s'
                                    % ', '.join(sorted(unknown)))
        return cls(**dct)

    def replace(self, **kwargs):
        dct = self.to_dict()
        dct.update(kwargs)
        return self.from_dict(dct)

    def __eq__(self, other):
        return isinstance(other, HyperParams) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        args = ', '.join('%s=%r' % (k, v) for k, v in self.to_dict().items())
        return 'HyperParams(%s)' % args


def parse_count_or_fraction(value):
    """Interpret a command line value as a fraction in (0, 1] when it is
    written with a decimal point, as an absolute count otherwise."""
    if isinstance(value, numbers.Integral):
        return None, int(value)
    if isinstance(value, numbers.Real):
        return float(value), None
    text = str(value).strip()
    if '.' in text or 'e' in text.lower():
        fraction = float(text)
        if not 0 < fraction <= 1:
            raise ValueError('fraction %r must lie in (0, 1]' % text)
        return fraction, None
    return None, int(text)
