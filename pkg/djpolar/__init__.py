from __future__ import unicode_literals
import warnings

from django import VERSION as DJANGO_VERSION

__title__ = "dj-polar"
__summary__ = "Django + polar varieties of real plane curves"
__uri__ = "https://github.com/mightbejosh/dj-polar/"

__version__ = "0.1.0.dev"

__author__ = "Zach Layng"
__email__ = "mightbejosh@gmail.com"

__license__ = "BSD"
__copyright__ = "Copyright 2016 Zach Layng"

if DJANGO_VERSION < (3, 2):
    msg = "dj-polar deprecation notice: Django 3.1 and lower are not\n" \
        "supported. Please upgrade to Django 3.2 or higher.\n"
    warnings.warn(msg)
