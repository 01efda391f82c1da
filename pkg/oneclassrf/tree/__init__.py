"""Cells, one-class trees, splitting criteria and the tree builder."""
from __future__ import absolute_import

from .cell import Cell, cell_volume, split_cell, bounding_box
from .model import TreeNode, OneClassTree, LEAF
from .criteria import (OC_GINI, OC_SHANNON, NAIVE_OC_GINI, RANDOM, CRITERIA,
                       SplitEvaluation, AdaptiveModelParams,
                       two_class_gini_proxy, oc_gini_proxy, oc_shannon_proxy,
                       naive_oc_gini_proxy, class_ratio_naive,
                       adaptive_model_params, oc_adaptive_proxy_general,
                       proportional_baseline, find_best_split)
from .builder import (GrowthConfig, grow_tree, node_gain, node_split,
                      default_max_depth)
from .isolation import grow_isolation_tree
