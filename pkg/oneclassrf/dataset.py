# Author: oneclassrf developers
# Contributors:
# All rights reserved.

"""Datasets and their declarative CSV specifications."""

from __future__ import absolute_import, print_function, division

import logging
import os

import numpy as np
import pandas as pd
import yaml

from .exceptions import DatasetError, PreconditionError
from .utils import check_binary_labels, get_data_home

__all__ = ['Dataset', 'DatasetSpec', 'load_csv', 'load_dataset',
           'builtin_spec', 'builtin_specs']

logger = logging.getLogger(__name__)

_SPEC_KEYS = ('path', 'label_column', 'anomaly_values', 'inlier_values',
              'exclude_values', 'drop_columns', 'column_names',
              'min_distinct_values')
_MAX_REPORTED = 10


class Dataset(object):
    """Numeric feature matrix with optional outlier labels.

    Parameters
    ----------
    features : array-like, shape=(n_rows, n_features)
        Finite values only.
    labels : array-like of {0, 1}, shape=(n_rows,), optional
        1 marks an outlier.
    feature_names : list of str, optional
    name : str, optional
        Used in reports.
    """

    def __init__(self, features, labels=None, feature_names=None, name=None):
        features = np.array(features, dtype=np.float64)
        if features.ndim != 2:
            raise PreconditionError('features must be 2D, got shape %s'
                                    % (features.shape,))
        if features.shape[0] < 1 or features.shape[1] < 1:
            raise PreconditionError('a dataset needs at least one row and '
                                    'one column')
        if not np.all(np.isfinite(features)):
            raise PreconditionError('features must be finite')
        if labels is not None:
            labels = check_binary_labels(labels, len(features))
            labels.flags.writeable = False
        if feature_names is not None:
            feature_names = tuple(str(n) for n in feature_names)
            if len(feature_names) != features.shape[1]:
                raise PreconditionError('expected %d feature names, got %d'
                                        % (features.shape[1],
                                           len(feature_names)))
        features.flags.writeable = False
        self.features = features
        self.labels = labels
        self.feature_names = feature_names
        self.name = name

    @property
    def n_rows(self):
        return self.features.shape[0]

    @property
    def n_features(self):
        return self.features.shape[1]

    @property
    def n_outliers(self):
        return 0 if self.labels is None else int(self.labels.sum())

    def subset(self, rows):
        rows = np.asarray(rows)
        labels = None if self.labels is None else self.labels[rows]
        return Dataset(self.features[rows], labels, self.feature_names,
                       self.name)

    def without_labels(self):
        return Dataset(self.features, None, self.feature_names, self.name)

    def __repr__(self):
        return 'Dataset(name=%r, n_rows=%d, n_features=%d, n_outliers=%d)' % (
            self.name, self.n_rows, self.n_features, self.n_outliers)


def _as_strings(values):
    if values is None:
        return None
    if isinstance(values, (str, int, float)):
        values = [values]
    return [str(v).strip() for v in values]


class DatasetSpec(object):
    """How to turn a CSV file into a :class:`Dataset`.

    Parameters
    ----------
    path : str
        CSV file. Comma separated, UTF-8, with a header row unless
        ``column_names`` is given.
    label_column : str, optional
        Column holding the class; it is never used as a feature.
    anomaly_values : list of str, optional
        Label values mapped to 1. When absent the label column must already
        contain 0/1.
    inlier_values : list of str, optional
        Label values mapped to 0. When absent, the values not in
        ``anomaly_values`` must all be the same (that value is the inlier
        class); when given, any other value is an error.
    exclude_values : list of str, optional
        Rows with these label values are dropped.
    drop_columns : list of str, optional
    column_names : list of str, optional
        Names for a header-less file.
    min_distinct_values : int, optional
        Feature columns with fewer distinct values are dropped.
    name : str, optional
    """

    def __init__(self, path, label_column=None, anomaly_values=None,
                 inlier_values=None, exclude_values=None, drop_columns=None,
                 column_names=None, min_distinct_values=None, name=None):
        self.path = path
        self.label_column = None if label_column is None else str(label_column)
        self.anomaly_values = _as_strings(anomaly_values)
        self.inlier_values = _as_strings(inlier_values)
        self.exclude_values = _as_strings(exclude_values) or []
        self.drop_columns = _as_strings(drop_columns) or []
        self.column_names = _as_strings(column_names)
        self.min_distinct_values = (None if min_distinct_values is None
                                    else int(min_distinct_values))
        if name is None:
            name = os.path.splitext(os.path.basename(str(path)))[0]
        self.name = name

    @classmethod
    def from_yaml(cls, fn):
        """Read a spec file. A relative ``path`` is looked up next to the
        spec file first, then in the data home."""
        with open(fn) as f:
            dct = yaml.safe_load(f) or {}
        if not isinstance(dct, dict):
            raise DatasetError('%s: a dataset spec must be a mapping' % fn)
        unknown = set(dct) - set(_SPEC_KEYS) - {'name'}
        if unknown:
            raise DatasetError('%s: unknown keys %s'
                               % (fn, ', '.join(sorted(unknown))))
        if 'path' not in dct:
            raise DatasetError('%s: missing key "path"' % fn)
        path = os.path.expanduser(str(dct['path']))
        if not os.path.isabs(path):
            beside = os.path.join(os.path.dirname(os.path.abspath(fn)), path)
            path = (beside if os.path.exists(beside)
                    else os.path.join(get_data_home(), path))
        dct['path'] = path
        dct.setdefault('name', os.path.splitext(os.path.basename(fn))[0])
        return cls(**dct)

    def replace(self, **kwargs):
        dct = dict((k, getattr(self, k)) for k in _SPEC_KEYS + ('name',))
        dct.update(kwargs)
        return DatasetSpec(**dct)

    def __repr__(self):
        return 'DatasetSpec(path=%r, label_column=%r)' % (self.path,
                                                          self.label_column)


def builtin_specs():
    """Names of the dataset specs shipped with the package."""
    dirname = os.path.join(os.path.dirname(__file__), 'dataset_specs')
    return sorted(os.path.splitext(fn)[0] for fn in os.listdir(dirname)
                  if fn.endswith('.yaml'))


def builtin_spec(name):
    fn = os.path.join(os.path.dirname(__file__), 'dataset_specs',
                      '%s.yaml' % name)
    if not os.path.exists(fn):
        raise DatasetError('no built-in dataset spec %r (have: %s)'
                           % (name, ', '.join(builtin_specs())))
    return DatasetSpec.from_yaml(fn)


def _format_problems(problems, frame):
    shown = ['row %d, column %r: %r' % (row, col, frame.at[row, col])
             for row, col in problems[:_MAX_REPORTED]]
    more = len(problems) - _MAX_REPORTED
    if more > 0:
        shown.append('and %d more' % more)
    return '; '.join(shown)


def _map_labels(raw, spec):
    if spec.anomaly_values is None:
        numeric = pd.to_numeric(raw, errors='coerce')
        bad = ~numeric.isin([0, 1])
        if bad.any():
            rows = list(raw.index[bad])
            raise DatasetError(
                'label column %r must hold 0/1 unless anomaly_values are '
                'given; bad rows: %s' % (spec.label_column,
                                         ', '.join(map(str, rows[:_MAX_REPORTED]))),
                [(r, spec.label_column) for r in rows])
        return numeric.astype(np.int64).values

    is_anomaly = raw.isin(spec.anomaly_values)
    if spec.inlier_values is not None:
        unknown = ~is_anomaly & ~raw.isin(spec.inlier_values)
    else:
        # the most frequent non-anomaly value is the inlier class
        others = raw[~is_anomaly].value_counts()
        unknown = ~is_anomaly & ~raw.isin(others.index[:1])
    if unknown.any():
        rows = list(raw.index[unknown])
        raise DatasetError(
            'unknown label values %s in column %r (rows %s); list every '
            'inlier value in inlier_values'
            % (sorted(set(raw[unknown])), spec.label_column,
               ', '.join(map(str, rows[:_MAX_REPORTED]))),
            [(r, spec.label_column) for r in rows])
    return is_anomaly.astype(np.int64).values


def load_csv(spec, **kwargs):
    """Load a CSV file into a :class:`Dataset`.

    Parameters
    ----------
    spec : DatasetSpec or str
        A spec, or the path of a CSV file (then ``kwargs`` are passed to
        :class:`DatasetSpec`).

    Returns
    -------
    dataset : Dataset

    Raises
    ------
    DatasetError
        When the file is missing, a column is unknown, a label value is
        unexpected or a retained cell is not a finite number. Row indices in
        the message count data rows from 0, header excluded.
    """
    if not isinstance(spec, DatasetSpec):
        spec = DatasetSpec(spec, **kwargs)
    if not os.path.exists(spec.path):
        raise DatasetError('no such file: %s' % spec.path)

    if spec.column_names is not None:
        frame = pd.read_csv(spec.path, header=None, names=spec.column_names,
                            dtype=str, keep_default_na=False,
                            skipinitialspace=True, encoding='utf-8')
    else:
        frame = pd.read_csv(spec.path, dtype=str, keep_default_na=False,
                            skipinitialspace=True, encoding='utf-8')
    frame.columns = [str(c).strip() for c in frame.columns]
    frame = frame.apply(lambda col: col.str.strip())

    for col in spec.drop_columns + ([spec.label_column]
                                    if spec.label_column else []):
        if col not in frame.columns:
            raise DatasetError('column %r not found in %s (columns: %s)'
                               % (col, spec.path, ', '.join(frame.columns)))

    labels = None
    if spec.label_column is not None:
        raw = frame[spec.label_column]
        keep = ~raw.isin(spec.exclude_values)
        frame, raw = frame[keep], raw[keep]
        labels = _map_labels(raw, spec)
        frame = frame.drop(columns=[spec.label_column])
    frame = frame.drop(columns=spec.drop_columns)
    if frame.shape[1] == 0:
        raise DatasetError('%s has no feature columns left' % spec.path)
    if len(frame) == 0:
        raise DatasetError('%s has no data rows' % spec.path)

    numeric = frame.apply(pd.to_numeric, errors='coerce').astype(np.float64)
    bad = ~np.isfinite(numeric.values)
    if bad.any():
        rows, cols = np.nonzero(bad)
        problems = [(frame.index[r], frame.columns[c])
                    for r, c in zip(rows, cols)]
        raise DatasetError('non-numeric or missing values in %s: %s'
                           % (spec.path, _format_problems(problems, frame)),
                           problems)

    if spec.min_distinct_values is not None:
        few = [c for c in numeric.columns
               if numeric[c].nunique() < spec.min_distinct_values]
        if few:
            logger.info('dropping columns with fewer than %d distinct '
                        'values: %s', spec.min_distinct_values, few)
            numeric = numeric.drop(columns=few)

    dataset = Dataset(numeric.values, labels, list(numeric.columns),
                      name=spec.name)
    logger.info('loaded %r', dataset)
    return dataset


def _header(path):
    columns = pd.read_csv(path, nrows=0, dtype=str, encoding='utf-8').columns
    return [str(c).strip() for c in columns]


def _matching_builtin_spec(path):
    # ionosphere.csv -> the ionosphere spec, with or without a header row
    stem = os.path.splitext(os.path.basename(path))[0]
    if stem not in builtin_specs():
        return None
    spec = builtin_spec(stem).replace(path=path)
    if spec.column_names is not None and spec.label_column in _header(path):
        spec = spec.replace(column_names=None)
    return spec


def _minority_class(path, label_column):
    """(anomaly_values, inlier_values) for a two-valued text label column,
    the rarer value being the anomaly; None when that is ambiguous."""
    if label_column not in _header(path):
        return None
    raw = pd.read_csv(path, usecols=[label_column], dtype=str,
                      keep_default_na=False, skipinitialspace=True,
                      encoding='utf-8')[label_column].str.strip()
    if pd.to_numeric(raw, errors='coerce').notna().all():
        return None
    counts = raw.value_counts()
    if len(counts) != 2 or counts.iloc[0] == counts.iloc[1]:
        return None
    return [counts.index[1]], [counts.index[0]]


def load_dataset(path=None, spec=None, label_column=None,
                 anomaly_values=None, inlier_values=None,
                 infer_labels=False):
    """Resolve ``--data`` / ``--spec`` style arguments into a Dataset.

    ``spec`` may be a spec file or the name of a built-in spec; ``path``
    then overrides its file. Without a spec, ``path`` is read with the given
    label column (if any).

    With ``infer_labels`` and no spec, the labels are guessed for a bare
    data file:

    - a file named after a built-in spec (``ionosphere.csv``) uses it;
    - otherwise the last column holds the labels unless ``label_column``
      is given;
    - a text label column with two values, one rarer than the other, makes
      the rarer value the anomaly unless ``anomaly_values`` is given.
    """
    if (spec is None and infer_labels and path is not None
            and os.path.exists(path) and label_column is None
            and anomaly_values is None and inlier_values is None):
        builtin = _matching_builtin_spec(path)
        if builtin is not None:
            logger.info('using the built-in %r spec for %s', builtin.name,
                        path)
            return load_csv(builtin)

    if spec is not None:
        if os.path.exists(spec):
            spec = DatasetSpec.from_yaml(spec)
        else:
            spec = builtin_spec(spec)
        if path is not None:
            spec = spec.replace(path=path)
        if label_column is not None:
            spec = spec.replace(label_column=label_column)
        if anomaly_values is not None:
            spec = spec.replace(anomaly_values=anomaly_values)
        if inlier_values is not None:
            spec = spec.replace(inlier_values=inlier_values)
        return load_csv(spec)
    if path is None:
        raise PreconditionError('either a data file or a dataset spec is '
                                'required')

    if infer_labels and os.path.exists(path):
        if label_column is None:
            label_column = _header(path)[-1]
        if anomaly_values is None and inlier_values is None:
            guess = _minority_class(path, label_column)
            if guess is not None:
                anomaly_values, inlier_values = guess
                logger.info('label %r: anomalies are %r, inliers %r',
                            label_column, anomaly_values, inlier_values)
    return load_csv(DatasetSpec(path, label_column=label_column,
                                anomaly_values=anomaly_values,
                                inlier_values=inlier_values))
