"""Exception and warning classes raised by oneclassrf."""
from __future__ import absolute_import

__all__ = ['OneClassRFError', 'PreconditionError', 'DatasetError',
           'ModelFormatError', 'TrainingTimeout', 'BackupWarning',
           'ImportanceWarning']


class OneClassRFError(RuntimeError):
    """Base class for all errors raised deliberately by this package."""


class PreconditionError(OneClassRFError, ValueError):
    """An operation was called with arguments violating its contract."""


class DatasetError(OneClassRFError, ValueError):
    """A dataset could not be ingested.

    Parameters
    ----------
    msg : str
        Human readable summary.
    problems : list of (int, str) tuples, optional
        The (row_index, column_name) pairs that failed to parse.
    """

    def __init__(self, msg, problems=None):
        super(DatasetError, self).__init__(msg)
        self.problems = list(problems) if problems is not None else []


class ModelFormatError(OneClassRFError):
    """A serialized model file is malformed or has an unknown version."""


class TrainingTimeout(OneClassRFError):
    """Training did not finish before its deadline."""


class BackupWarning(UserWarning):
    pass


class ImportanceWarning(UserWarning):
    pass
