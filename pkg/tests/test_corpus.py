"""
.. module:: dj-polar.tests.test_corpus
   :synopsis: dj-polar built-in curve Tests.

"""
from django.test import SimpleTestCase

from djpolar.corpus import ENTRIES, entries, get_entry
from djpolar.exceptions import UnknownCorpusEntry
from djpolar.jobs import FACTS
from djpolar.polynomials import Interval

from . import ELLIPTIC, TWO_CIRCLES, curve


class TestCorpus(SimpleTestCase):

    def test_keys(self):
        self.assertEqual(list(ENTRIES), ["ex1", "ex2", "ex3", "ex4", "ex5", "counterexample-h", "circles-f", "lines-g"])

    def test_get_entry(self):
        entry = get_entry("ex4")
        self.assertEqual(entry.polynomial, curve(ELLIPTIC))
        self.assertEqual(entry.box, (Interval(-3, 3), Interval(-3, 3)))
        self.assertFalse(entry.slow)

    def test_unknown(self):
        self.assertRaisesMessage(UnknownCorpusEntry, "Unknown corpus entry 'ex9'", get_entry, "ex9")

    def test_entries(self):
        self.assertEqual(len(entries()), len(ENTRIES))
        self.assertEqual(len(entries(["all"])), len(ENTRIES))
        self.assertEqual([entry.key for entry in entries(["lines-g", "ex1"])], ["lines-g", "ex1"])

    def test_degrees(self):
        degrees = dict((entry.key, entry.polynomial.degree) for entry in entries())
        self.assertEqual(degrees, {"ex1": 6, "ex2": 12, "ex3": 6, "ex4": 3, "ex5": 6,
                                   "counterexample-h": 12, "circles-f": 4, "lines-g": 4})

    def test_counterexample_is_built_from_the_circles(self):
        self.assertEqual(get_entry("circles-f").polynomial, curve(TWO_CIRCLES))

    def test_facts_are_known(self):
        for entry in entries():
            for name in entry.facts:
                self.assertIn(name, FACTS, "{0} lists unknown fact {1}".format(entry.key, name))

    def test_resolutions_are_powers_of_two(self):
        for entry in entries():
            self.assertEqual(entry.resolution & (entry.resolution - 1), 0)
