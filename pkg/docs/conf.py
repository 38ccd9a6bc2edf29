# -*- coding: utf-8 -*-
#
# dj-polar documentation build configuration file.

import os
import sys

sys.path.append(os.path.dirname(os.getcwd()))

import djpolar  # noqa

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode']
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'dj-polar'
copyright = djpolar.__copyright__.replace("Copyright ", "")

version = djpolar.__version__
release = djpolar.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

autodoc_member_order = 'bysource'

html_theme = 'default'
htmlhelp_basename = 'dj-polardoc'

man_pages = [
    ('index', 'dj-polar', u'dj-polar Documentation', [djpolar.__author__], 1)
]
