from __future__ import print_function, division, absolute_import

import os
import shutil
import warnings
from os.path import expanduser, join

from ..exceptions import BackupWarning

__all__ = ['backup', 'get_data_home']


def backup(fn):
    """If ``fn`` exists, rename it and issue a warning

    This function will rename an existing filename {fn}.bak.{i} where
    i is the smallest integer that gives a filename that doesn't exist.

    Parameters
    ----------
    fn : str
        The filename to check.
    """
    if not os.path.exists(fn):
        return

    backnum = 1
    backfmt = "{fn}.bak.{backnum}"
    trial_fn = backfmt.format(fn=fn, backnum=backnum)
    while os.path.exists(trial_fn):
        backnum += 1
        trial_fn = backfmt.format(fn=fn, backnum=backnum)

    warnings.warn("{fn} exists. Moving it to {newfn}"
                  .format(fn=fn, newfn=trial_fn),
                  BackupWarning)
    shutil.move(fn, trial_fn)


def get_data_home(data_home=None):
    """Return the path of the oneclassrf data dir.

    This is where benchmark CSV files (``ionosphere.csv``, ``pima.csv``, ...)
    are looked up. By default it is a folder named 'oneclassrf_data' in the
    user's home folder. It can be set by the 'OCRF_DATA' environment
    variable or programmatically by giving an explicit folder path. The '~'
    symbol is expanded to the user home folder.

    Unlike a download cache, the folder is not created.
    """
    if data_home is None:
        data_home = os.environ.get('OCRF_DATA', join('~', 'oneclassrf_data'))
    return expanduser(data_home)
