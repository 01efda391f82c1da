# Author: oneclassrf developers
# Contributors:
# All rights reserved.

from __future__ import print_function, absolute_import

import os

from ..cmdline import argument, pairtype
from ..ensemble import load_model, score_grid, grid_bounds, write_grid_csv
from ..utils import backup
from .common import OCRFCommand
from .score import SCORE_KINDS

__all__ = ['GridCommand']


class GridCommand(OCRFCommand):
    _concrete = True
    _group = '2-Analysis'
    name = 'grid'
    description = '''Evaluate a 2-feature model on a regular grid and write
    x,y,score rows, ready for a level-set plot.'''
    model = argument('--model', required=True, type=os.path.expanduser,
                     help='Model file written by "train".')
    score = argument('--score', choices=SCORE_KINDS, default='depth',
                     help='Scoring function.')
    xbounds = argument('--xbounds', type=pairtype(float), help='''xmin,xmax.
        Defaults to the extent of the trees' root cells.''')
    ybounds = argument('--ybounds', type=pairtype(float), help='''ymin,ymax.
        Defaults to the extent of the trees' root cells.''')
    resolution = argument('--resolution', type=pairtype(int),
                          default=(100, 100), help='Grid cells along x,y.')
    out = argument('--out', required=True, type=os.path.expanduser,
                   help='Output CSV file.')

    def start(self):
        forest = load_model(self.model)
        print('Loaded %r' % forest)
        bounds = None
        if forest.train_dims == 2 and (self.xbounds or self.ybounds):
            lower, upper = grid_bounds(forest)
            x = self.xbounds or (lower[0], upper[0])
            y = self.ybounds or (lower[1], upper[1])
            bounds = ([x[0], y[0]], [x[1], y[1]])
        grid = score_grid(forest, self.score, bounds, self.resolution)

        backup(self.out)
        write_grid_csv(grid, self.out)
        print('Wrote %dx%d grid to %s' % (self.resolution[0],
                                          self.resolution[1], self.out))
