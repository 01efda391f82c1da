#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""oneclassrf: one-class random forests for novelty and outlier detection
"""

from __future__ import print_function, absolute_import

import io
import re
from os.path import dirname, join

from setuptools import setup, find_packages

import itertools as it


def read_version():
    with io.open(join(dirname(__file__), 'oneclassrf', 'version.py'),
                 encoding='utf-8') as f:
        return re.search(r"^version = '([^']+)'", f.read(), re.M).group(1)


base_requirements = [
    'numpy',
    'scipy',
    'pandas',
    'scikit-learn',
    'pyyaml',
    'joblib',
]

test_requirements = [
    'pytest',
]

all_requirements = list(it.chain.from_iterable([
    base_requirements,
    test_requirements,
]))

setup(
    name='oneclassrf',
    author='oneclassrf developers',
    description="one-class random forests for novelty and outlier detection",
    long_description=io.open(join(dirname(__file__), 'README.md'),
                             encoding='utf-8').read(),
    long_description_content_type='text/markdown',
    version=read_version(),
    platforms=['Linux', 'Unix', 'Mac OS-X'],
    classifiers=[
        "Topic :: Scientific/Engineering",
        "License :: OSI Approved :: MIT License",
        'Programming Language :: Python :: 3'
    ],
    python_requires='>=3.7',

    packages=find_packages(),

    # the dataset specs directory is not a package
    package_data={
        'oneclassrf': ['dataset_specs/*.yaml'],
    },

    entry_points={'console_scripts':
                  ['ocrf = oneclassrf.scripts.ocrf:main']},

    zip_safe=False,

    install_requires=base_requirements,

    extras_require={
        'test': test_requirements,
        'all': all_requirements,
    }
)
