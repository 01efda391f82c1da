from __future__ import absolute_import

from .train import TrainCommand
from .score import ScoreCommand
from .evaluate import EvalCommand
from .grid import GridCommand
from .importances import ImportancesCommand

__all__ = ['TrainCommand', 'ScoreCommand', 'EvalCommand', 'GridCommand',
           'ImportancesCommand']
