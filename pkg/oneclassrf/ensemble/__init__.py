"""Forest training, isolation forest baseline, scoring and model files."""
from __future__ import absolute_import

from .params import HyperParams, parse_count_or_fraction
from .forest import Forest, train, tree_rng, variable_importance, OneClassRF
from .iforest import iforest_params, train_iforest, IsolationForest
from .scoring import (ScoreKind, harmonic_c, tree_path_measure, path_measures,
                      depth_score, stepwise_density, typical_cell_density,
                      score_samples, abnormality, score_grid, grid_bounds,
                      write_grid_csv)
from .serialize import (MAGIC, FORMAT_VERSION, node_dtype, save_model,
                        load_model, dumps, loads)
