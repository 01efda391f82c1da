from __future__ import print_function, division

import os

import pytest

from oneclassrf.config import (DEFAULTS, load_config, merge_settings,
                               build_estimator, build_protocol)
from oneclassrf.ensemble import OneClassRF, IsolationForest
from oneclassrf.ensemble.params import parse_count_or_fraction
from oneclassrf.exceptions import PreconditionError


def _config(tmpdir, text):
    fn = os.path.join(str(tmpdir), 'ocrf.yaml')
    with open(fn, 'w') as f:
        f.write(text)
    return fn


def test_precedence(tmpdir):
    config = load_config(_config(tmpdir, 'gamma: 2.0\nn-trees: 50\n'
                                         'mode: outlier\n'))
    settings = merge_settings(config, {'gamma': 3.0, 'n_trees': None,
                                       'data': 'x.csv'})
    assert settings['gamma'] == 3.0
    assert settings['n_trees'] == 50
    assert settings['mode'] == 'outlier'
    assert settings['criterion'] == DEFAULTS['criterion']
    assert 'data' not in settings


def test_bad_configs(tmpdir):
    with pytest.raises(PreconditionError):
        load_config(_config(tmpdir, 'gama: 2.0\n'))
    with pytest.raises(PreconditionError):
        load_config(_config(tmpdir, '- 1\n- 2\n'))
    with pytest.raises(PreconditionError):
        merge_settings({'algo': 'svm'})
    with pytest.raises(PreconditionError):
        merge_settings(None, {'criterion': 'gini'})
    with pytest.raises(PreconditionError):
        merge_settings(None, {'score': 'mass'})


def test_parse_count_or_fraction():
    assert parse_count_or_fraction('0.2') == (0.2, None)
    assert parse_count_or_fraction('1.0') == (1.0, None)
    assert parse_count_or_fraction('200') == (None, 200)
    assert parse_count_or_fraction(0.5) == (0.5, None)
    assert parse_count_or_fraction(7) == (None, 7)
    with pytest.raises(ValueError):
        parse_count_or_fraction('1.5')
    with pytest.raises(ValueError):
        parse_count_or_fraction('lots')


def test_build_estimator():
    model = build_estimator(merge_settings(None, {'max_samples': '0.3',
                                                  'gamma': 2.0, 'seed': 4}))
    assert isinstance(model, OneClassRF)
    assert model.max_samples == 0.3
    assert model.gamma == 2.0
    assert model.random_state == 4

    model = build_estimator(merge_settings(None, {'algo': 'iforest'}))
    assert isinstance(model, IsolationForest)
    assert model.max_samples == 256
    with pytest.raises(PreconditionError):
        build_estimator(merge_settings(None, {'algo': 'iforest',
                                              'max_samples': '0.5'}))


def test_build_protocol():
    protocol = build_protocol(merge_settings(None, {'repeats': 3,
                                                    'seed': 9}))
    assert protocol.n_repeats == 3
    assert protocol.base_seed == 9
    assert protocol.mode == 'novelty'
    assert protocol.timeout_seconds is None
