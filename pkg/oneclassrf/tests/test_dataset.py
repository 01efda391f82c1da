from __future__ import print_function, division

import os

import numpy as np
import numpy.testing as npt
import pytest

from oneclassrf.dataset import (Dataset, DatasetSpec, load_csv, load_dataset,
                                builtin_spec, builtin_specs)
from oneclassrf.exceptions import DatasetError, PreconditionError
from oneclassrf.utils import backup, get_data_home
from oneclassrf.exceptions import BackupWarning


def _write(dirname, name, text):
    fn = os.path.join(str(dirname), name)
    with open(fn, 'w') as f:
        f.write(text)
    return fn


def test_dataset():
    dataset = Dataset([[1, 2], [3, 4], [5, 6]], [0, 1, 0], ['a', 'b'],
                      name='toy')
    assert (dataset.n_rows, dataset.n_features, dataset.n_outliers) == (3, 2, 1)
    assert dataset.subset([0, 2]).n_outliers == 0
    assert dataset.without_labels().labels is None
    with pytest.raises(ValueError):
        dataset.features[0, 0] = 10
    with pytest.raises(PreconditionError):
        Dataset([[1, np.nan]])
    with pytest.raises(PreconditionError):
        Dataset([[1, 2]], feature_names=['a'])
    with pytest.raises(ValueError):
        Dataset([[1, 2]], labels=[2])


def test_load_csv_with_header(tmpdir):
    fn = _write(tmpdir, 'toy.csv',
                'f1,f2,kind\n1.5,2,normal\n-3,4e-2,attack\n 5 , 6 ,normal\n')
    dataset = load_csv(fn, label_column='kind', anomaly_values=['attack'])
    npt.assert_array_equal(dataset.features, [[1.5, 2], [-3, 0.04], [5, 6]])
    npt.assert_array_equal(dataset.labels, [0, 1, 0])
    assert dataset.feature_names == ('f1', 'f2')
    assert dataset.name == 'toy'


def test_numeric_labels(tmpdir):
    fn = _write(tmpdir, 'num.csv', 'a,b,y\n1,2,0\n3,4,1\n')
    npt.assert_array_equal(load_csv(fn, label_column='y').labels, [0, 1])
    fn = _write(tmpdir, 'bad.csv', 'a,b,y\n1,2,0\n3,4,2\n')
    with pytest.raises(DatasetError) as excinfo:
        load_csv(fn, label_column='y')
    assert excinfo.value.problems == [(1, 'y')]


def test_unparseable_cell_names_row_and_column(tmpdir):
    fn = _write(tmpdir, 'nan.csv', 'a,b,y\n1,2,0\n3,,1\n5,x,0\n7,8,1\n')
    with pytest.raises(DatasetError) as excinfo:
        load_csv(fn, label_column='y')
    assert excinfo.value.problems == [(1, 'b'), (2, 'b')]
    assert 'row 1' in str(excinfo.value)

    fn = _write(tmpdir, 'nan2.csv', 'a,b\n1,2\nNaN,4\n')
    with pytest.raises(DatasetError) as excinfo:
        load_csv(fn)
    assert excinfo.value.problems == [(1, 'a')]


def test_label_mapping(tmpdir):
    fn = _write(tmpdir, 'labels.csv',
                'a,cls\n1,g\n2,b\n3,g\n4,x\n5,b\n')
    with pytest.raises(DatasetError) as excinfo:
        load_csv(fn, label_column='cls', anomaly_values=['b'],
                 inlier_values=['g'])
    assert 'x' in str(excinfo.value)

    # without inlier_values the non-anomaly rows must share one value
    with pytest.raises(DatasetError) as excinfo:
        load_csv(fn, label_column='cls', anomaly_values=['b'])
    assert excinfo.value.problems == [(3, 'cls')]

    dataset = load_csv(fn, label_column='cls', anomaly_values=['b'],
                       inlier_values=['g', 'x'])
    npt.assert_array_equal(dataset.labels, [0, 1, 0, 0, 1])

    dataset = load_csv(fn, label_column='cls', anomaly_values=['b'],
                       inlier_values=['g'], exclude_values=['x'])
    npt.assert_array_equal(dataset.features.ravel(), [1, 2, 3, 5])
    npt.assert_array_equal(dataset.labels, [0, 1, 0, 1])


def test_columns(tmpdir):
    fn = _write(tmpdir, 'raw.data', '1,0,0.5,g\n1,0,0.7,b\n1,0,0.9,g\n')
    spec = DatasetSpec(fn, label_column='class', anomaly_values='b',
                       column_names=['a', 'b', 'c', 'class'],
                       drop_columns=['a'], min_distinct_values=2)
    dataset = load_csv(spec)
    assert dataset.feature_names == ('c',)
    npt.assert_array_equal(dataset.labels, [0, 1, 0])

    with pytest.raises(DatasetError):
        load_csv(spec.replace(drop_columns=['zz']))
    with pytest.raises(DatasetError):
        load_csv(spec.replace(label_column='label'))
    with pytest.raises(DatasetError):
        load_csv(spec.replace(path=os.path.join(str(tmpdir), 'missing.csv')))


def test_spec_files(tmpdir):
    _write(tmpdir, 'data.csv', 'u,v,label\n1,2,no\n3,4,yes\n5,6,no\n')
    spec_fn = _write(tmpdir, 'mine.yaml',
                     'path: data.csv\nlabel_column: label\n'
                     'anomaly_values: ["yes"]\n')
    dataset = load_dataset(spec=spec_fn)
    assert dataset.name == 'mine'
    assert dataset.n_outliers == 1

    bad_fn = _write(tmpdir, 'bad.yaml', 'path: data.csv\nlabels: label\n')
    with pytest.raises(DatasetError):
        DatasetSpec.from_yaml(bad_fn)
    with pytest.raises(PreconditionError):
        load_dataset()


def test_builtin_specs(tmpdir):
    assert set(builtin_specs()) >= {'ionosphere', 'pima'}
    with pytest.raises(DatasetError):
        builtin_spec('nope')

    random = np.random.RandomState(0)
    rows = []
    for i in range(20):
        values = ['1', '0'] + ['%.5f' % v for v in random.uniform(-1, 1, 32)]
        rows.append(','.join(values + ['b' if i % 3 == 0 else 'g']))
    fn = _write(tmpdir, 'iono.csv', '\n'.join(rows) + '\n')
    dataset = load_dataset(path=fn, spec='ionosphere')
    assert dataset.n_features == 32
    assert dataset.n_rows == 20
    assert dataset.n_outliers == 7
    assert dataset.feature_names[0] == 'a03'


def _ionosphere_rows(random, n_rows=20):
    rows = []
    for i in range(n_rows):
        values = ['1', '0'] + ['%.5f' % v for v in random.uniform(-1, 1, 32)]
        rows.append(','.join(values + ['b' if i % 3 == 0 else 'g']))
    return rows


def test_file_named_after_builtin_spec(tmpdir):
    random = np.random.RandomState(1)
    raw = _write(tmpdir, 'ionosphere.csv',
                 '\n'.join(_ionosphere_rows(random)) + '\n')
    dataset = load_dataset(path=raw, infer_labels=True)
    assert dataset.name == 'ionosphere'
    assert (dataset.n_rows, dataset.n_features,
            dataset.n_outliers) == (20, 32, 7)

    header = ','.join('a%02d' % i for i in range(1, 35)) + ',class'
    sub = tmpdir.mkdir('with_header')
    fn = _write(sub, 'ionosphere.csv',
                '\n'.join([header] + _ionosphere_rows(random)) + '\n')
    dataset = load_dataset(path=fn, infer_labels=True)
    assert (dataset.n_rows, dataset.n_features,
            dataset.n_outliers) == (20, 32, 7)


def test_infer_text_labels(tmpdir):
    fn = _write(tmpdir, 'iono.csv',
                'x,y,class\n1,2,g\n2,3,b\n3,4,g\n4,5,g\n')
    dataset = load_dataset(path=fn, infer_labels=True)
    npt.assert_array_equal(dataset.labels, [0, 1, 0, 0])
    assert dataset.feature_names == ('x', 'y')
    with pytest.raises(DatasetError):
        load_dataset(path=fn, label_column='class')

    # a tie or a third value is ambiguous
    fn = _write(tmpdir, 'tie.csv', 'x,class\n1,g\n2,b\n')
    with pytest.raises(DatasetError):
        load_dataset(path=fn, infer_labels=True)
    fn = _write(tmpdir, 'three.csv', 'x,class\n1,g\n2,b\n3,g\n4,x\n')
    with pytest.raises(DatasetError):
        load_dataset(path=fn, infer_labels=True)
    dataset = load_dataset(path=fn, infer_labels=True, anomaly_values=['b'],
                           inlier_values=['g', 'x'])
    npt.assert_array_equal(dataset.labels, [0, 1, 0, 0])


def test_data_home(monkeypatch, tmpdir):
    monkeypatch.setenv('OCRF_DATA', str(tmpdir))
    assert get_data_home() == str(tmpdir)
    assert get_data_home('~/x') == os.path.expanduser('~/x')


def test_backup(tmpdir):
    fn = _write(tmpdir, 'model.bin', 'old')
    with pytest.warns(BackupWarning):
        backup(fn)
    assert not os.path.exists(fn)
    assert os.path.exists(fn + '.bak.1')
    backup(fn)
