# Author: oneclassrf developers
# Contributors:
# All rights reserved.

from __future__ import print_function, absolute_import

import os

import pandas as pd

from ..cmdline import argument
from ..ensemble import load_model, variable_importance
from ..utils import backup
from .common import OCRFCommand

__all__ = ['ImportancesCommand']


class ImportancesCommand(OCRFCommand):
    _concrete = True
    _group = '2-Analysis'
    name = 'importances'
    description = '''Per-feature variable importance of a trained model: the
    one-class Gini decreases of its splits, weighted by node size and
    averaged over trees.'''
    model = argument('--model', required=True, type=os.path.expanduser,
                     help='Model file written by "train".')
    out = argument('--out', required=True, type=os.path.expanduser,
                   help='Output CSV file (feature,importance).')

    def start(self):
        forest = load_model(self.model)
        print('Loaded %r' % forest)
        importances = variable_importance(forest)
        names = forest.feature_names or [str(j) for j in
                                         range(forest.train_dims)]
        frame = pd.DataFrame({'feature': names, 'importance': importances},
                             columns=['feature', 'importance'])
        print(frame.sort_values('importance', ascending=False)
              .to_string(index=False))

        backup(self.out)
        frame.to_csv(self.out, index=False, float_format='%.9g')
        print('Wrote importances to %s' % self.out)
