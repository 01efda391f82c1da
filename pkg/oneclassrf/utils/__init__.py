from __future__ import print_function, division, absolute_import
from .validation import *
from .io import *
