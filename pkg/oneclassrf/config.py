# Author: oneclassrf developers
# Contributors:
# All rights reserved.

"""Run settings: built-in defaults, a YAML config file, command line flags.

Later sources win: flags override the config file, which overrides the
defaults. A flag left unset on the command line (``None``) does not
override anything.

Example config file::

    algo: ocrf
    criterion: oc-gini
    gamma: 1.0
    n_trees: 100
    max_samples: 0.2        # a fraction (decimal point) or a row count
    mode: novelty
    repeats: 10
    seed: 0
"""

from __future__ import absolute_import, print_function, division

import yaml

from .ensemble import OneClassRF, IsolationForest, ScoreKind
from .ensemble.params import parse_count_or_fraction
from .evaluation import Protocol
from .exceptions import PreconditionError
from .tree import CRITERIA

__all__ = ['ALGORITHMS', 'DEFAULTS', 'load_config', 'merge_settings',
           'build_estimator', 'build_protocol']

ALGORITHMS = ('ocrf', 'iforest')

DEFAULTS = {
    'algo': 'ocrf',
    'criterion': 'oc-gini',
    'gamma': 1.0,
    'n_trees': 100,
    'max_depth': None,
    'max_samples': None,
    'max_features_tree': None,
    'max_features_node': 5,
    'naive_alpha_n': None,
    'score': 'depth',
    'mode': 'novelty',
    'repeats': 10,
    'seed': 0,
    'test_fraction': 0.5,
    'anomaly_cap': 0.1,
    'timeout_seconds': None,
    'n_jobs': 1,
}

_IFOREST_MAX_SAMPLES = 256


def load_config(fn):
    """Read a YAML config file into a dict of settings."""
    with open(fn) as f:
        dct = yaml.safe_load(f) or {}
    if not isinstance(dct, dict):
        raise PreconditionError('%s: a config file must be a mapping' % fn)
    dct = dict((str(k).replace('-', '_'), v) for k, v in dct.items())
    unknown = set(dct) - set(DEFAULTS)
    if unknown:
        raise PreconditionError('%s: unknown config keys %s'
                                % (fn, ', '.join(sorted(unknown))))
    return dct


def merge_settings(config=None, flags=None):
    """Defaults, updated by ``config``, updated by the non-None ``flags``."""
    settings = dict(DEFAULTS)
    settings.update(config or {})
    settings.update((k, v) for k, v in (flags or {}).items()
                    if k in DEFAULTS and v is not None)
    if settings['algo'] not in ALGORITHMS:
        raise PreconditionError('algo must be one of %s, got %r'
                                % (', '.join(ALGORITHMS), settings['algo']))
    if settings['criterion'] not in CRITERIA:
        raise PreconditionError('criterion must be one of %s, got %r'
                                % (', '.join(CRITERIA), settings['criterion']))
    ScoreKind.parse(settings['score'])
    return settings


def _count_or_fraction(value, name):
    if value is None:
        return None
    try:
        fraction, count = parse_count_or_fraction(value)
    except ValueError as e:
        raise PreconditionError('%s: %s' % (name, e))
    return count if fraction is None else fraction


def build_estimator(settings):
    """The (unfitted) estimator described by ``settings``."""
    max_samples = _count_or_fraction(settings['max_samples'], 'max_samples')
    if settings['algo'] == 'iforest':
        if max_samples is None:
            max_samples = _IFOREST_MAX_SAMPLES
        if isinstance(max_samples, float):
            raise PreconditionError('iforest needs an absolute max_samples')
        return IsolationForest(n_trees=int(settings['n_trees']),
                               max_samples=max_samples,
                               random_state=int(settings['seed']),
                               n_jobs=int(settings['n_jobs']))
    return OneClassRF(
        n_trees=int(settings['n_trees']), max_samples=max_samples,
        max_features_tree=_count_or_fraction(settings['max_features_tree'],
                                             'max_features_tree'),
        max_features_node=int(settings['max_features_node']),
        gamma=float(settings['gamma']), max_depth=settings['max_depth'],
        criterion=settings['criterion'],
        naive_alpha_n=settings['naive_alpha_n'],
        random_state=int(settings['seed']), n_jobs=int(settings['n_jobs']))


def build_protocol(settings):
    return Protocol(mode=settings['mode'],
                    test_fraction=float(settings['test_fraction']),
                    anomaly_cap=float(settings['anomaly_cap']),
                    n_repeats=int(settings['repeats']),
                    base_seed=int(settings['seed']),
                    timeout_seconds=settings['timeout_seconds'])
