# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from fractions import Fraction

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DEFAULT_RESOLUTION = getattr(settings, "DJPOLAR_DEFAULT_RESOLUTION", 256)
BOX_MARGIN = Fraction(getattr(settings, "DJPOLAR_BOX_MARGIN", 1))

# Widths are stored as binary exponents: a setting of 48 means 2^-48.
SOLVE_PRECISION = getattr(settings, "DJPOLAR_SOLVE_PRECISION", 48)
REPORT_PRECISION = getattr(settings, "DJPOLAR_REPORT_WIDTH", 40)
AMBIGUITY_PRECISION = getattr(settings, "DJPOLAR_AMBIGUITY_PRECISION", 30)

SHEAR_SEED = getattr(settings, "DJPOLAR_SHEAR_SEED", 1729)
MODULAR_RESULTANT = getattr(settings, "DJPOLAR_MODULAR_RESULTANT", True)

GAUSS_SAMPLES = getattr(settings, "DJPOLAR_GAUSS_SAMPLES", 256)
SVG_SIZE = getattr(settings, "DJPOLAR_SVG_SIZE", 600)

SAVE_RUNS = getattr(settings, "DJPOLAR_SAVE_RUNS", False)


def report_width():
    return Fraction(1, 2 ** REPORT_PRECISION)


def ambiguity_width():
    return Fraction(1, 2 ** AMBIGUITY_PRECISION)


def validate_resolution(resolution):
    """
    Component maps subdivide a square box by halving, so the resolution has
    to be a power of two.

    :param resolution: number of cells along one side of the box
    :type resolution: int
    :rtype: int
    """
    try:
        resolution = int(resolution)
    except (TypeError, ValueError):
        raise ImproperlyConfigured("DJPOLAR resolution must be an integer, got {0!r}.".format(resolution))

    if resolution < 2 or resolution & (resolution - 1):
        raise ImproperlyConfigured("DJPOLAR resolution must be a power of two >= 2, got {0}.".format(resolution))

    return resolution


def get_resultant_method():
    """
    Returns the name of the sympy resultant algorithm the solver asks for.

    DJPOLAR_MODULAR_RESULTANT switches between Collins' modular algorithm and
    the subresultant PRS; both return the same polynomial.
    """
    modular = getattr(settings, "DJPOLAR_MODULAR_RESULTANT", MODULAR_RESULTANT)
    if not isinstance(modular, bool):
        raise ImproperlyConfigured("DJPOLAR_MODULAR_RESULTANT must be True or False.")
    return "collins" if modular else "prs"


validate_resolution(DEFAULT_RESOLUTION)
