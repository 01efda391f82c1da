# -*- coding: utf-8 -*-
#
# oneclassrf documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.mathjax',
    'numpydoc',
]

autosummary_generate = True
autodoc_default_flags = ['members', 'inherited-members']
numpydoc_class_members_toctree = False

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'oneclassrf'
copyright = 'the oneclassrf developers'

import oneclassrf.version
version = oneclassrf.version.short_version
release = oneclassrf.version.version

exclude_patterns = ['_build', '_templates']
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'
htmlhelp_basename = 'oneclassrfdoc'

man_pages = [
    ('cli', 'ocrf', 'one-class random forest benchmarks',
     ['the oneclassrf developers'], 1)
]
