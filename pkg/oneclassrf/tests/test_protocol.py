from __future__ import print_function, division

import json
import os
import shutil
import tempfile

import numpy as np
import numpy.testing as npt
import pandas as pd
import pytest

from oneclassrf.dataset import Dataset
from oneclassrf.ensemble import OneClassRF, IsolationForest
from oneclassrf.evaluation import (Protocol, split_rows, run_protocol,
                                   roc_auc, report_to_json, write_json,
                                   write_aggregate_csv, write_curves,
                                   aggregate_frame, TIMING_FIELDS,
                                   AGGREGATE_COLUMNS, NOVELTY, OUTLIER)
from oneclassrf.exceptions import DatasetError, PreconditionError


def _synthetic(n_inliers=2000, outlier_rate=0.05, seed=0):
    random = np.random.RandomState(seed)
    inliers = random.normal(size=(n_inliers, 2))
    n_outliers = int(round(outlier_rate * n_inliers))
    outliers = []
    while len(outliers) < n_outliers:
        x = random.uniform(-8, 8, size=2)
        if np.abs(x).max() > 4:
            outliers.append(x)
    X = np.concatenate([inliers, outliers])
    y = np.r_[np.zeros(n_inliers, dtype=int), np.ones(n_outliers, dtype=int)]
    return Dataset(X, y, ['x', 'y'], name='synthetic')


def _masked(report):
    dct = report.to_dict()
    for repeat in dct['repeats']:
        for field in TIMING_FIELDS:
            repeat.pop(field)
    for field in TIMING_FIELDS:
        dct['aggregates'].pop(field)
    return dct


def test_protocol_validation():
    with pytest.raises(PreconditionError):
        Protocol(mode='both')
    with pytest.raises(PreconditionError):
        Protocol(test_fraction=1.0)
    with pytest.raises(PreconditionError):
        Protocol(n_repeats=0)
    with pytest.raises(PreconditionError):
        Protocol(timeout_seconds=0)


def test_novelty_split():
    labels = np.r_[np.zeros(90, dtype=int), np.ones(10, dtype=int)]
    train, test = split_rows(labels, Protocol(NOVELTY), seed=0)
    assert labels[train].sum() == 0
    assert labels[test].sum() == 5
    assert len(np.intersect1d(train, test)) == 0
    assert len(train) + len(test) == 95
    again = split_rows(labels, Protocol(NOVELTY), seed=0)
    npt.assert_array_equal(again[0], train)
    other = split_rows(labels, Protocol(NOVELTY), seed=1)
    assert not np.array_equal(other[0], train)


def test_outlier_split_honors_cap():
    random = np.random.RandomState(0)
    labels = (random.uniform(size=351) < 0.36).astype(int)
    for cap in (0.05, 0.1, 0.2):
        for seed in range(20):
            train, test = split_rows(labels, Protocol(OUTLIER, anomaly_cap=cap),
                                     seed)
            assert labels[train].mean() <= cap
            assert labels[train].sum() > 0
            assert len(np.intersect1d(train, test)) == 0
            # every inlier is used
            assert (labels[train] == 0).sum() + (labels[test] == 0).sum() \
                == (labels == 0).sum()


def test_split_needs_two_outliers():
    labels = np.r_[np.zeros(50, dtype=int), [1]]
    with pytest.raises(DatasetError):
        split_rows(labels, Protocol(NOVELTY), seed=0)


def test_synthetic_separation():
    dataset = _synthetic()
    report = run_protocol(dataset, OneClassRF(n_trees=50),
                          Protocol(n_repeats=2, base_seed=0))
    aggregates = report.aggregates()
    assert aggregates['roc_auc'] >= 0.95
    assert 0 < aggregates['pr_auc'] <= 1
    assert [r.seed for r in report.repeats] == [0, 1]
    assert all(r.train_anomaly_rate == 0 for r in report.repeats)
    npt.assert_allclose(aggregates['roc_auc'],
                        np.mean([r.roc_auc for r in report.repeats]),
                        rtol=0, atol=1e-12)
    npt.assert_allclose(aggregates['roc_auc_std'],
                        np.std([r.roc_auc for r in report.repeats]),
                        rtol=0, atol=1e-12)


def test_negated_scores():
    dataset = _synthetic(n_inliers=500, seed=1)
    train, test = split_rows(dataset.labels, Protocol(), seed=0)
    model = OneClassRF(n_trees=20, random_state=0).fit(dataset.features[train])
    scores = model.decision_function(dataset.features[test])
    auc = roc_auc(scores, dataset.labels[test])
    npt.assert_allclose(roc_auc(-scores, dataset.labels[test]), 1 - auc,
                        atol=1e-12)


def test_single_repeat_and_determinism():
    dataset = _synthetic(n_inliers=400, seed=2)
    protocol = Protocol(OUTLIER, n_repeats=1, base_seed=7)
    a = run_protocol(dataset, OneClassRF(n_trees=10), protocol,
                     score_kind='stepwise-density')
    b = run_protocol(dataset, OneClassRF(n_trees=10), protocol,
                     score_kind='stepwise-density')
    assert a.aggregates()['roc_auc_std'] == 0.0
    assert a.aggregates()['pr_auc_std'] == 0.0
    assert _masked(a) == _masked(b)
    assert a.repeats[0].train_anomaly_rate <= 0.1
    assert a.to_dict()['score'] == 'stepwise-density'
    assert a.to_dict()['algorithm'] == 'OneClassRF'


def test_parallel_repeats_match_serial():
    dataset = _synthetic(n_inliers=300, seed=3)
    protocol = Protocol(n_repeats=3)
    serial = run_protocol(dataset, IsolationForest(n_trees=10), protocol)
    parallel = run_protocol(dataset, IsolationForest(n_trees=10), protocol,
                            n_jobs=2)
    assert _masked(serial) == _masked(parallel)


def test_timeout_marks_results_missing():
    dataset = _synthetic(n_inliers=300, seed=4)
    report = run_protocol(dataset, OneClassRF(n_trees=5),
                          Protocol(n_repeats=2, timeout_seconds=1e-9))
    assert report.timed_out
    assert all(r.roc_auc is None for r in report.repeats)
    assert all(v is None for v in report.aggregates().values())
    assert report.curves is None

    dct = json.loads(report_to_json(report))
    assert dct['aggregates']['roc_auc'] is None
    assert dct['repeats'][0]['timed_out'] is True

    dirname = tempfile.mkdtemp()
    try:
        fn = os.path.join(dirname, 'table.csv')
        write_aggregate_csv([report], fn)
        with open(fn) as f:
            lines = f.read().splitlines()
        assert lines[0] == ','.join(AGGREGATE_COLUMNS)
        assert lines[1].startswith('synthetic,OneClassRF,NA,NA')
        assert write_curves(report, os.path.join(dirname, 'c')) is None
    finally:
        shutil.rmtree(dirname)


def test_report_files():
    dataset = _synthetic(n_inliers=300, seed=5)
    report = run_protocol(dataset, IsolationForest(n_trees=10),
                          Protocol(n_repeats=2), algorithm='iforest')
    frame = aggregate_frame([report])
    assert list(frame.columns) == AGGREGATE_COLUMNS
    assert frame['algorithm'][0] == 'iforest'

    dirname = tempfile.mkdtemp()
    try:
        fn = os.path.join(dirname, 'report.json')
        write_json(report, fn)
        with open(fn) as f:
            dct = json.load(f)
        assert len(dct['repeats']) == 2
        assert dct['protocol']['mode'] == 'novelty'
        assert dct['params']['n_trees'] == 10
        assert 'random_state' not in dct['params']

        roc_fn, pr_fn = write_curves(report, os.path.join(dirname, 'c'))
        roc = pd.read_csv(roc_fn)
        assert list(roc.columns) == ['fpr', 'tpr']
        assert roc['fpr'].iloc[0] == 0 and roc['tpr'].iloc[-1] == 1
        pr = pd.read_csv(pr_fn)
        assert list(pr.columns) == ['recall', 'precision']
        npt.assert_allclose(pr['recall'].iloc[-1], 1.0)
    finally:
        shutil.rmtree(dirname)


def test_unlabelled_or_clean_datasets_are_rejected():
    X = np.random.RandomState(6).normal(size=(50, 2))
    with pytest.raises(DatasetError):
        run_protocol(Dataset(X), OneClassRF(n_trees=2))
    with pytest.raises(DatasetError):
        run_protocol(Dataset(X, np.zeros(50, dtype=int)), OneClassRF(n_trees=2))
