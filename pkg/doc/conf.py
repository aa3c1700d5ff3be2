# -*- coding: utf-8 -*-
# Sphinx configuration of the gammaforge documentation.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

from gammaforge import __version__  # noqa: E402

project = 'Gammaforge'
copyright = '2026, FNUSA-ICRC, BME'
author = 'FNUSA-ICRC, BME'
version = '.'.join(__version__.split('.')[:2])
release = __version__

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
]
# Docstrings are numpy style
napoleon_numpy_docstring = True
napoleon_google_docstring = False
autodoc_member_order = 'bysource'

source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'alabaster'
htmlhelp_basename = 'Gammaforgedoc'
