# Author: oneclassrf developers
# Contributors:
# All rights reserved.

#-----------------------------------------------------------------------------
# Imports
#-----------------------------------------------------------------------------

from __future__ import print_function, absolute_import

import logging
import os

from ..cmdline import Command, argument, argument_group, FlagAction, listtype
from ..config import load_config, merge_settings, build_estimator
from ..dataset import load_dataset
from ..tree import CRITERIA

__all__ = ['OCRFCommand', 'DataCommand', 'ForestCommand']

#-----------------------------------------------------------------------------
# Code
#-----------------------------------------------------------------------------


class OCRFCommand(Command):
    verbose = argument('--verbose', action=FlagAction, default=False,
                       help='Log progress at INFO level.')

    def __init__(self, args):
        super(OCRFCommand, self).__init__(args)
        logging.basicConfig(
            level=logging.INFO if self.verbose else logging.WARNING,
            format='%(levelname)s %(name)s: %(message)s')


data_group = argument_group('Data')
data_group.add_argument('--data', type=os.path.expanduser, help='''CSV
    file with a header row. Overrides the file named in --spec.''')
data_group.add_argument('--spec', help='''Dataset spec: a YAML file, or the
    name of a spec shipped with oneclassrf (ionosphere, pima).''')
data_group.add_argument('--label-column', help='''Column holding the class
    labels. It is never used as a feature.''')
data_group.add_argument('--anomaly-values', type=listtype, help='''Comma
    separated label values marking anomalies. Without it, labels must be
    0/1.''')
data_group.add_argument('--inlier-values', type=listtype, help='''Comma
    separated label values marking inliers. Without it, every row that is
    not an anomaly must carry the same label.''')


class DataCommand(OCRFCommand):
    data_group = data_group

    def load_data(self, infer_labels=False):
        dataset = load_dataset(path=self.data, spec=self.spec,
                               label_column=self.label_column,
                               anomaly_values=self.anomaly_values,
                               inlier_values=self.inlier_values,
                               infer_labels=infer_labels)
        print('Loaded %s: %d rows, %d features, %d outliers'
              % (dataset.name, dataset.n_rows, dataset.n_features,
                 dataset.n_outliers))
        return dataset


forest_group = argument_group('Forest')
forest_group.add_argument('--config', type=os.path.expanduser, help='''YAML
    config file. Flags given on the command line override its values.''')
forest_group.add_argument('--algo', choices=['ocrf', 'iforest'], help='''
    One-class random forest, or the isolation forest baseline. (default:
    ocrf)''')
forest_group.add_argument('--criterion', choices=list(CRITERIA), help='''
    Split criterion of ocrf. (default: oc-gini)''')
forest_group.add_argument('--gamma', type=float, help='''Assumed outlier to
    inlier ratio in every node. (default: 1)''')
forest_group.add_argument('--naive-alpha-n', type=float, help='''Outlier
    budget of the naive criterion.''')
forest_group.add_argument('--n-trees', type=int, help='''Number of trees.
    (default: 100)''')
forest_group.add_argument('--max-depth', type=int, help='''Depth cap.
    (default: ceil(log2(rows per tree)))''')
forest_group.add_argument('--max-samples', help='''Rows per tree: a fraction
    written with a decimal point (0.2), or a count (200). (default: 0.2 with
    a floor of 100 for ocrf, 256 for iforest)''')
forest_group.add_argument('--max-features-tree', help='''Features per tree,
    same convention. (default: 0.5 with a floor of 5)''')
forest_group.add_argument('--max-features-node', type=int, help='''Features
    searched at each node. (default: 5)''')
forest_group.add_argument('--seed', type=int, help='''Master random seed.
    (default: 0)''')
forest_group.add_argument('--n-jobs', type=int, help='''Number of parallel
    workers. (default: 1)''')


class ForestCommand(DataCommand):
    forest_group = forest_group

    def settings(self):
        config = load_config(self.config) if self.config else None
        return merge_settings(config, vars(self))

    def estimator(self, settings):
        return build_estimator(settings)
