# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from fractions import Fraction
import numbers

import numpy as np

VERDICT_COVERED = "Covered"
VERDICT_ONLY_SINGULAR = "OnlySingularWitnesses"
VERDICT_UNCOVERED = "Uncovered"

CERTIFICATE_SIMPLE_ROOT = "simple-root"
CERTIFICATE_REFINED = "refined"

COMMAND_CHOICES = [
    ("polar", "Classical polar"),
    ("reciprocal", "Reciprocal polar"),
    ("singular", "Singular points"),
    ("components", "Component map"),
    ("render", "Figure"),
    ("verify", "Corpus verification"),
]

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNMET = 2

EXIT_CODE_CHOICES = [
    (EXIT_OK, "Hypotheses met, every component covered"),
    (EXIT_ERROR, "Input or computation error"),
    (EXIT_UNMET, "Computed, with unmet hypotheses or uncovered components"),
]


def to_fraction(value):
    """
    Converts ints, Fractions, "p/q" strings and sympy rationals to a Fraction.
    Floats are refused: every coordinate handled by dj-polar is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not rationals")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    if hasattr(value, "p") and hasattr(value, "q") and getattr(value, "is_Rational", False):
        return Fraction(int(value.p), int(value.q))
    if hasattr(value, "numerator") and hasattr(value, "denominator") and not isinstance(value, float):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError("Cannot convert {0!r} to an exact rational".format(value))


def sympy_rational(value):
    import sympy

    value = to_fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def format_fraction(value):
    """'p/q' or 'p' for an integral value."""
    value = to_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{0}/{1}".format(value.numerator, value.denominator)


def shear_sequence(seed, count):
    """
    Deterministic small rational shear factors derived from ``seed``.

    Every run with the same seed tries the same factors in the same order.
    """
    rng = np.random.default_rng(seed)
    factors = []
    while len(factors) < count:
        numerator = int(rng.integers(1, 18))
        denominator = int(rng.integers(3, 14))
        sign = int(rng.choice((-1, 1)))
        factor = Fraction(sign * numerator, denominator)
        if factor not in factors:
            factors.append(factor)
    return factors
