"""One-class random forests for novelty and outlier detection"""
from __future__ import absolute_import

from .version import version as __version__

__author__ = """oneclassrf developers"""
