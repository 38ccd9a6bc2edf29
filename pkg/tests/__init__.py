import unittest

from django.conf import settings as django_settings

CIRCLE = "x^2 + y^2 - 1"
ELLIPSE = "x^2 + 4*y^2 - 4"
NODAL_CUBIC = "y^2 - x^2*(x + 1)"
TWO_CIRCLES = "(x^2 + y^2 - 1)*((x - 4)^2 + (y - 2)^2 - 1)"
ELLIPTIC = "x^2 - y*(y + 1)*(y + 2)"


def slow(test):
    """Skips ``test`` when the suite runs with --skip-slow."""
    return unittest.skipIf(getattr(django_settings, "DJPOLAR_TESTS_SKIP_SLOW", False), "slow test skipped")(test)


def curve(text):
    # Imported here so that ``tests.settings`` can be loaded before Django is configured.
    from djpolar.polynomials import parse

    return parse(text, nvars=2)
