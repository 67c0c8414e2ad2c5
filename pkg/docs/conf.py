# coding=utf-8
"""Sphinx configuration for the Tukey FSBP documentation.

See http://sphinx-doc.org/config.html for every option.
"""
import os
import re
import sys
from packaging.version import Version


# Let autodoc import :mod:`tukey_fsbp` from the source tree.
ROOT_DIR = os.path.abspath(os.path.join(
    os.path.dirname(__file__),
    os.path.pardir
))
sys.path.insert(0, ROOT_DIR)

# VERSION must be PEP 440 compliant (Version raises InvalidVersion otherwise)
# and dated as YYYY.MM.DD, optionally with a same-day release suffix.
with open(os.path.join(ROOT_DIR, 'VERSION')) as handle:
    VERSION = handle.read().strip()
    Version(VERSION)
    assert re.match(r'\d{4,4}(\.\d\d){2,2}', VERSION) is not None


# pylint:disable=invalid-name
author = 'Tukey FSBP developers'
copyright = '2026, Tukey FSBP developers'  # pylint:disable=redefined-builtin
project = 'Tukey FSBP'
version = release = VERSION

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.intersphinx']
intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
}
source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['_build']
nitpicky = True
nitpick_ignore = [('py:class', 'type')]
autodoc_default_options = {
    'members': True,
    'show-inheritance': True,
    'undoc-members': True,
}

htmlhelp_basename = 'TukeyFsbpdoc'
man_pages = [(
    master_doc,
    'tukey-fsbp',
    project + ' Documentation',
    [author],
    1,
)]
