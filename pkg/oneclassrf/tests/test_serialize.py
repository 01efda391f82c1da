from __future__ import print_function, division

import json
import os
import struct

import numpy as np
import numpy.testing as npt
import pytest

from oneclassrf.dataset import Dataset
from oneclassrf.ensemble import (HyperParams, train, train_iforest, dumps,
                                 loads, save_model, load_model, node_dtype,
                                 MAGIC, ScoreKind, score_samples)
from oneclassrf.exceptions import ModelFormatError


def _forest():
    X = np.random.RandomState(0).normal(size=(300, 6))
    return train(Dataset(X, feature_names=list('abcdef')),
                 HyperParams(n_trees=5, criterion='oc-shannon', gamma=2.0,
                             seed=3))


def test_round_trip_scores_are_identical(tmpdir):
    random = np.random.RandomState(1)
    for forest in (_forest(), train_iforest(random.normal(size=(300, 3)),
                                            n_trees=5)):
        fn = os.path.join(str(tmpdir), 'model.bin')
        save_model(forest, fn)
        loaded = load_model(fn)
        assert loaded.kind == forest.kind
        assert loaded.hyperparams == forest.hyperparams
        assert loaded.feature_names == forest.feature_names
        queries = random.normal(size=(50, forest.train_dims)) * 2
        for kind in ScoreKind:
            npt.assert_array_equal(score_samples(loaded, queries, kind),
                                   score_samples(forest, queries, kind))
        assert dumps(loaded) == dumps(forest)


def test_layout():
    forest = _forest()
    data = dumps(forest)
    magic, version, header_length = struct.unpack_from('<4sHI', data)
    assert magic == MAGIC == b'OCRF'
    assert version == 1
    offset = 10 + header_length
    n_nodes, subsample_size, k = struct.unpack_from('<III', data, offset)
    tree = forest.trees[0]
    assert (n_nodes, subsample_size, k) == (tree.n_nodes, 100, 5)
    features = np.frombuffer(data, dtype='<i4', count=k, offset=offset + 12)
    npt.assert_array_equal(features, tree.feature_subset)
    records = np.frombuffer(data, dtype=node_dtype(k), count=n_nodes,
                            offset=offset + 12 + 4 * k)
    npt.assert_array_equal(records['depth'], tree.arrays['depth'])
    assert records['kind'][0] == 1
    assert node_dtype(3).itemsize == 1 + 4 + 8 + 8 + 4 + 2 * 3 * 8


def test_corrupt_files():
    data = dumps(_forest())
    with pytest.raises(ModelFormatError):
        loads(b'XXXX' + data[4:])
    with pytest.raises(ModelFormatError):
        loads(data[:4] + struct.pack('<H', 2) + data[6:])
    with pytest.raises(ModelFormatError):
        loads(data[:-1])
    with pytest.raises(ModelFormatError):
        loads(data + b'\x00')
    with pytest.raises(ModelFormatError):
        loads(data[:5])


def test_inconsistent_tree_raises_model_format_error():
    data = dumps(_forest())
    header_length = struct.unpack_from('<4sHI', data)[2]
    offset = 10 + header_length
    n_nodes, _, k = struct.unpack_from('<III', data, offset)
    start = offset + 12 + 4 * k
    end = start + node_dtype(k).itemsize * n_nodes

    # every depth shifted by one: parent/child links stay valid, root does not
    records = np.frombuffer(data, dtype=node_dtype(k), count=n_nodes,
                            offset=start).copy()
    records['depth'] += 1
    with pytest.raises(ModelFormatError):
        loads(data[:start] + records.tobytes() + data[end:])

    # a tree without features
    leaf = np.zeros(1, dtype=node_dtype(0))
    leaf['n_inliers'] = 2
    empty = struct.pack('<III', 1, 2, 0) + leaf.tobytes()
    with pytest.raises(ModelFormatError):
        loads(data[:offset] + empty + data[end:])

    # header disagrees with the trees that follow
    header = json.loads(data[10:offset].decode('utf-8'))
    header['feature_names'] = ['a']
    header_bytes = json.dumps(header, sort_keys=True).encode('utf-8')
    with pytest.raises(ModelFormatError):
        loads(struct.pack('<4sHI', MAGIC, 1, len(header_bytes)) +
              header_bytes + data[offset:])
