# -*- coding: utf-8 -*-
"""
.. module:: djpolar.corpus
   :synopsis: dj-polar - the built-in curves and the facts known about them

Each entry carries its polynomial exactly as published, the box and grid
resolution its component map is computed on, and a dictionary of expected
facts that ``manage.py verify`` checks.

Known fact keys:

``components``            number of components in the box
``compact``               whether every component is compact
``singular_kinds``        sorted kinds of the real singular points
``cusp_directions``       sorted tangent directions at the singular points
``polar_witnesses``       number of classical polar witnesses
``polar_verdicts``        sorted verdicts for the classical polar
``polar_never_all_covered``  no flag direction covers every component
``reciprocal_verdicts``   sorted verdicts for the standard reciprocal polar
``reciprocal_error``      exception raised by the standard reciprocal polar
``centered_quadric``      quadric built for ``center``
``centered_verdicts``     sorted verdicts for the reciprocal polar of that quadric
"""
from __future__ import unicode_literals

from collections import OrderedDict

from .exceptions import UnknownCorpusEntry
from .polynomials import parse
from .topology import fraction_box
from .utils import VERDICT_COVERED, VERDICT_ONLY_SINGULAR

F1 = ("X1^6+3*X1^4*X2^2-12*X1^4*X2+7*X1^4+3*X1^2*X2^4-24*X1^2*X2^3+66*X1^2*X2^2"
      "-132*X1^2*X2+136*X1^2+X2^6-12*X2^5+59*X2^4-132*X2^3+84*X2^2+144*X2-143")
F2 = "((X1+2)*X2-(X1+2)^6-X2^6)*(X1*X2-X1^6-X2^6)+1/100*X2^6"
F3 = "144-24*X2^2-88*X1^2+X2^4-X1^6+17*X1^4-14*X2^2*X1^2+1/100*X2^6"
F4 = "X1^2-X2*(X2+1)*(X2+2)"
F5 = "((X1-4)^2+(X2-2)^2-1)^2+1/100*((X1-7/2)*(X1-9/2))^3"
CIRCLES = "(X1^2+X2^2-1)*((X1-4)^2+(X2-2)^2-1)"
LINES = "(X2-1/2)*(X2+1/2)*(X1-7/2)*(X1-9/2)"
COUNTEREXAMPLE = "({0})^2+1/100*({1})^3".format(CIRCLES, LINES)

ORDINARY_DOUBLE = "OrdinaryRealMultiple(2)"


class CorpusEntry(object):

    def __init__(self, key, text, box, resolution, description, facts, slow=False):
        self.key = key
        self.text = text
        self.box = fraction_box(box)
        self.resolution = resolution
        self.description = description
        self.facts = OrderedDict(facts)
        self.slow = slow
        self._polynomial = None

    @property
    def polynomial(self):
        if self._polynomial is None:
            self._polynomial = parse(self.text, nvars=2)
        return self._polynomial

    def __repr__(self):
        return "CorpusEntry({0})".format(self.key)


ENTRIES = OrderedDict((entry.key, entry) for entry in [
    CorpusEntry(
        "ex1", F1, (-5, 5, -5, 5), 512,
        "Compact smooth sextic with three ovals.",
        [
            ("components", 3),
            ("compact", True),
            ("singular_kinds", []),
            ("polar_witnesses", 6),
            ("polar_verdicts", [VERDICT_COVERED] * 3),
            ("reciprocal_verdicts", [VERDICT_COVERED] * 3),
        ],
    ),
    CorpusEntry(
        "ex2", F2, (-4, 2, -2, 2), 512,
        "Two compact components with one ordinary double point each.",
        [
            ("components", 2),
            ("compact", True),
            ("singular_kinds", [ORDINARY_DOUBLE] * 2),
            ("polar_verdicts", [VERDICT_COVERED] * 2),
        ],
        slow=True,
    ),
    CorpusEntry(
        "ex3", F3, (-6, 6, -6, 6), 512,
        "Two non-compact components with one ordinary double point each.",
        [
            ("components", 2),
            ("compact", False),
            ("singular_kinds", [ORDINARY_DOUBLE] * 2),
            ("reciprocal_verdicts", [VERDICT_COVERED] * 2),
        ],
    ),
    CorpusEntry(
        "ex4", F4, (-3, 3, -3, 3), 256,
        "Elliptic curve through the origin; the reciprocal polar needs a new centre.",
        [
            ("components", 2),
            ("singular_kinds", []),
            ("reciprocal_error", "CenterOnCurve"),
            ("center", "1,0"),
            ("centered_quadric", "2*X0^2 - 2*X0*X1 + X1^2 + X2^2"),
            ("centered_verdicts", [VERDICT_COVERED] * 2),
        ],
    ),
    CorpusEntry(
        "ex5", F5, (3, 5, 0, 4), 256,
        "Perturbed doubled circle with four cusps.",
        [
            ("components", 2),
            ("compact", True),
            ("singular_kinds", ["Cusp"] * 4),
            ("reciprocal_verdicts", [VERDICT_ONLY_SINGULAR] * 2),
        ],
    ),
    CorpusEntry(
        "counterexample-h", COUNTEREXAMPLE, (-3, 7, -3, 7), 1024,
        "Four compact components with two cusps each; no flag covers all four.",
        [
            ("components", 4),
            ("compact", True),
            ("singular_kinds", ["Cusp"] * 8),
            ("cusp_directions", sorted(["(3 : sqrt(3))", "(3 : -sqrt(3))", "(1 : sqrt(3))", "(1 : -sqrt(3))"] * 2)),
            ("polar_never_all_covered", True),
        ],
        slow=True,
    ),
    CorpusEntry(
        "circles-f", CIRCLES, (-3, 7, -3, 7), 256,
        "The two circles the counterexample is built from.",
        [
            ("components", 2),
            ("compact", True),
            ("singular_kinds", []),
            ("polar_verdicts", [VERDICT_COVERED] * 2),
        ],
    ),
    CorpusEntry(
        "lines-g", LINES, (-3, 7, -3, 7), 256,
        "Two horizontal and two vertical lines.",
        [
            ("components", 1),
            ("compact", False),
            ("singular_kinds", [ORDINARY_DOUBLE] * 4),
        ],
    ),
])


def get_entry(key):
    try:
        return ENTRIES[key]
    except KeyError:
        raise UnknownCorpusEntry("Unknown corpus entry {0!r}; choose from {1}".format(key, ", ".join(ENTRIES)))


def entries(keys=None):
    if not keys or keys == ["all"] or keys == "all":
        return list(ENTRIES.values())
    return [get_entry(key) for key in keys]
