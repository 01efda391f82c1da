# Author: oneclassrf developers
# Contributors:
# All rights reserved.

"""Binary model file.

Layout (all integers little-endian, see docs/model_format.rst)::

    b'OCRF'                  magic
    uint16                   format version
    uint32                   header length H
    H bytes                  UTF-8 JSON header
    per tree:
        uint32 n_nodes, uint32 subsample_size, uint32 k
        int32[k]             feature subset
        n_nodes node records in pre-order (NODE_DTYPE(k))
"""

from __future__ import absolute_import, print_function, division

import json
import struct

import numpy as np

from .forest import Forest
from .params import HyperParams
from ..exceptions import ModelFormatError, PreconditionError
from ..tree import Cell, TreeNode, OneClassTree, LEAF

__all__ = ['MAGIC', 'FORMAT_VERSION', 'node_dtype', 'save_model',
           'load_model', 'dumps', 'loads']

MAGIC = b'OCRF'
FORMAT_VERSION = 1
_PREAMBLE = struct.Struct('<4sHI')
_TREE_HEADER = struct.Struct('<III')
_LEAF, _INTERNAL = 0, 1


def node_dtype(n_dims):
    """Packed little-endian record of one node of a ``n_dims`` tree."""
    return np.dtype([('kind', '<u1'), ('feature', '<i4'),
                     ('threshold', '<f8'), ('n_inliers', '<i8'),
                     ('depth', '<i4'), ('lower', '<f8', (n_dims,)),
                     ('upper', '<f8', (n_dims,))])


def _tree_records(tree):
    arrays = tree.arrays
    records = np.zeros(len(arrays['feature']),
                       dtype=node_dtype(len(tree.feature_subset)))
    internal = arrays['feature'] != LEAF
    records['kind'] = np.where(internal, _INTERNAL, _LEAF)
    records['feature'] = arrays['feature']
    records['threshold'] = arrays['threshold']
    records['n_inliers'] = arrays['n_inliers']
    records['depth'] = arrays['depth']
    records['lower'] = arrays['lower']
    records['upper'] = arrays['upper']
    return records


def dumps(forest):
    """Serialize a forest to bytes."""
    header = {
        'format_version': FORMAT_VERSION,
        'kind': forest.kind,
        'd': forest.train_dims,
        'n_trees': len(forest.trees),
        'hyperparams': forest.hyperparams.to_dict(),
        'feature_names': (None if forest.feature_names is None
                          else list(forest.feature_names)),
    }
    header_bytes = json.dumps(header, sort_keys=True).encode('utf-8')
    chunks = [_PREAMBLE.pack(MAGIC, FORMAT_VERSION, len(header_bytes)),
              header_bytes]
    for tree in forest.trees:
        records = _tree_records(tree)
        chunks.append(_TREE_HEADER.pack(len(records), tree.subsample_size,
                                        len(tree.feature_subset)))
        chunks.append(np.asarray(tree.feature_subset, dtype='<i4').tobytes())
        chunks.append(records.tobytes())
    return b''.join(chunks)


class _Reader(object):

    def __init__(self, data):
        self.data = data
        self.offset = 0

    def take(self, n_bytes):
        if self.offset + n_bytes > len(self.data):
            raise ModelFormatError('model file is truncated')
        chunk = self.data[self.offset:self.offset + n_bytes]
        self.offset += n_bytes
        return chunk

    def unpack(self, fmt):
        return fmt.unpack(self.take(fmt.size))


def _build_node(records, i):
    # returns (node, index just past its subtree)
    rec = records[i]
    cell = Cell(rec['lower'], rec['upper'])
    if rec['kind'] == _LEAF:
        return TreeNode(cell, rec['depth'], rec['n_inliers']), i + 1
    if rec['kind'] != _INTERNAL:
        raise ModelFormatError('unknown node kind %d' % rec['kind'])
    left, j = _build_node(records, i + 1)
    right, k = _build_node(records, j)
    node = TreeNode(cell, rec['depth'], rec['n_inliers'], rec['feature'],
                    rec['threshold'], left, right)
    return node, k


def _read_tree(reader):
    n_nodes, subsample_size, k = reader.unpack(_TREE_HEADER)
    features = np.frombuffer(reader.take(4 * k), dtype='<i4')
    dtype = node_dtype(k)
    records = np.frombuffer(reader.take(dtype.itemsize * n_nodes), dtype=dtype)
    try:
        root, end = _build_node(records, 0)
        if end != n_nodes:
            raise ModelFormatError('tree has %d trailing node records'
                                   % (n_nodes - end))
        return OneClassTree(root, subsample_size, features.astype(np.intp))
    except (IndexError, PreconditionError) as e:
        raise ModelFormatError('corrupt tree: %s' % e)


def loads(data):
    """Deserialize a forest written by :func:`dumps`."""
    reader = _Reader(bytes(data))
    magic, version, header_length = reader.unpack(_PREAMBLE)
    if magic != MAGIC:
        raise ModelFormatError('not a oneclassrf model file')
    if version != FORMAT_VERSION:
        raise ModelFormatError('unsupported model format version %d'
                               % version)
    try:
        header = json.loads(reader.take(header_length).decode('utf-8'))
        params = HyperParams.from_dict(header['hyperparams'])
        d, n_trees = int(header['d']), int(header['n_trees'])
    except (ValueError, KeyError, TypeError) as e:
        raise ModelFormatError('bad model header: %s' % e)

    trees = [_read_tree(reader) for _ in range(n_trees)]
    if reader.offset != len(reader.data):
        raise ModelFormatError('unexpected bytes after the last tree')
    try:
        return Forest(trees, params, d, header.get('feature_names'))
    except PreconditionError as e:
        raise ModelFormatError('inconsistent model header: %s' % e)


def save_model(forest, fn):
    with open(fn, 'wb') as f:
        f.write(dumps(forest))


def load_model(fn):
    with open(fn, 'rb') as f:
        return loads(f.read())
