# Author: oneclassrf developers
# Contributors:
# All rights reserved.

from __future__ import print_function, absolute_import

import os

from ..cmdline import argument
from ..ensemble import save_model
from ..utils import backup
from .common import ForestCommand

__all__ = ['TrainCommand']


class TrainCommand(ForestCommand):
    _concrete = True
    _group = '1-Model'
    name = 'train'
    description = '''Train a one-class random forest (or an isolation forest)
    and save it to a model file. Labels, if the dataset has any, are
    ignored.'''
    out = argument('--out', required=True, type=os.path.expanduser,
                   help='Output model file.')

    def start(self):
        settings = self.settings()
        dataset = self.load_data()
        estimator = self.estimator(settings)
        print(estimator)
        estimator.fit(dataset)

        print("*********\n*RESULTS*\n*********")
        print(estimator.summarize())
        print('-' * 80)

        backup(self.out)
        save_model(estimator.forest_, self.out)
        print('Saved model to %s' % self.out)
