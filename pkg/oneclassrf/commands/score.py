# Author: oneclassrf developers
# Contributors:
# All rights reserved.

from __future__ import print_function, absolute_import

import os

import pandas as pd

from ..cmdline import argument
from ..ensemble import load_model, score_samples, ScoreKind
from ..utils import backup
from .common import DataCommand

__all__ = ['ScoreCommand']

SCORE_KINDS = [k.value for k in ScoreKind]


class ScoreCommand(DataCommand):
    _concrete = True
    _group = '1-Model'
    name = 'score'
    description = '''Score every row of a CSV file with a trained model.
    Writes a CSV with columns row_index,score. The depth score grows with
    abnormality, the two densities shrink with it.'''
    model = argument('--model', required=True, type=os.path.expanduser,
                     help='Model file written by "train".')
    score = argument('--score', choices=SCORE_KINDS, default='depth',
                     help='Scoring function.')
    out = argument('--out', required=True, type=os.path.expanduser,
                   help='Output CSV file.')

    def start(self):
        forest = load_model(self.model)
        print('Loaded %r' % forest)
        dataset = self.load_data()
        scores = score_samples(forest, dataset.features, self.score)

        backup(self.out)
        pd.DataFrame({'row_index': range(len(scores)), 'score': scores},
                     columns=['row_index', 'score']).to_csv(
            self.out, index=False, float_format='%.17g')
        print('Wrote %d scores to %s' % (len(scores), self.out))
