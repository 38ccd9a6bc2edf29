"""
.. module:: dj-polar.tests.test_acceptance
   :synopsis: dj-polar checks of every documented fact of the built-in curves.

The degree 12 curves and the fine grids take minutes; run with
``runtests.py --skip-slow`` to leave them out.
"""
from fractions import Fraction
from functools import reduce
import operator
import random

from django.test import SimpleTestCase
import numpy as np
import sympy

from djpolar.corpus import get_entry
from djpolar.exceptions import CommonComponentError, DegeneratePolar
from djpolar.jobs import JobSpec, cmd_reciprocal, verify_entry
from djpolar.polars import Flag2D, Quadric, affine_classical_polar, affine_reciprocal_polar
from djpolar.polynomials import X1, X2, Polynomial
from djpolar.solving import EXCLUDED_SINGULAR, singular_points, solve_system
from djpolar.utils import EXIT_UNMET, VERDICT_ONLY_SINGULAR

from . import slow
from .test_polars import random_curve

X = Polynomial.variable(1)
Y = Polynomial.variable(2)


class TestCorpusFacts(SimpleTestCase):

    def assertEntryPasses(self, key):
        result = verify_entry(get_entry(key))
        failed = [(fact["fact"], fact["expected"], fact["actual"]) for fact in result["facts"] if not fact["passed"]]
        self.assertEqual(failed, [], "{0}: facts failed".format(key))

    @slow
    def test_ex1_three_ovals(self):
        self.assertEntryPasses("ex1")

    @slow
    def test_ex2_two_nodes(self):
        self.assertEntryPasses("ex2")

    @slow
    def test_ex3_non_compact(self):
        self.assertEntryPasses("ex3")

    def test_ex4_center_on_curve(self):
        self.assertEntryPasses("ex4")

    @slow
    def test_ex5_cusps(self):
        self.assertEntryPasses("ex5")

    @slow
    def test_counterexample(self):
        self.assertEntryPasses("counterexample-h")

    def test_circles(self):
        self.assertEntryPasses("circles-f")

    def test_lines(self):
        self.assertEntryPasses("lines-g")


class TestDegreeBounds(SimpleTestCase):

    @slow
    def test_random_curves(self):
        rng = random.Random(31)
        for n in range(50):
            degree = 3 + n % 3
            f = random_curve(rng, degree)
            classical = affine_classical_polar(f, Flag2D.from_direction(0, 1))
            self.assertEqual(classical.degree, degree - 1)
            try:
                self.assertTrue(len(solve_system(f, classical)) <= degree * (degree - 1))
                reciprocal = affine_reciprocal_polar(f, Quadric.standard())
                self.assertTrue(reciprocal.degree <= degree)
                self.assertTrue(len(solve_system(f, reciprocal)) <= degree * degree)
            except (CommonComponentError, DegeneratePolar):
                continue


def random_line(rng):
    while True:
        a, b, c = [rng.randint(-5, 5) for _ in range(3)]
        if a or b:
            return a, b, c


def proportional(line, other):
    return all(line[i] * other[j] == line[j] * other[i] for i, j in ((0, 1), (0, 2), (1, 2)))


def meet(line, other):
    (a1, b1, c1), (a2, b2, c2) = line, other
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    return Fraction(b1 * c2 - c1 * b2, det), Fraction(a2 * c1 - a1 * c2, det)


def arrangement(lines):
    return reduce(operator.mul, [X * a + Y * b + c for a, b, c in lines])


class TestSolveAgainstLineArrangements(SimpleTestCase):
    """Products of lines meet exactly where their lines cross, so the solutions are known in closed form."""

    @slow
    def test_random_systems(self):
        rng = random.Random(37)
        checked = 0
        while checked < 100:
            f_lines = [random_line(rng) for _ in range(rng.randint(1, 3))]
            g_lines = [random_line(rng) for _ in range(rng.randint(1, 3))]
            lines = f_lines + g_lines
            if any(proportional(line, other) for i, line in enumerate(lines) for other in lines[i + 1:]):
                continue
            crossings = (meet(line, other) for line in f_lines for other in g_lines)
            expected = set(point for point in crossings if point is not None)
            solutions = solve_system(arrangement(f_lines), arrangement(g_lines))
            self.assertEqual(len(solutions), len(expected), (f_lines, g_lines))
            for x, y in expected:
                self.assertEqual(sum(1 for point in solutions if point.contains(x, y)), 1, (f_lines, g_lines, x, y))
            checked += 1


def oracle_solutions(f, g):
    """
    Real common zeros of f and g computed with sympy's own real root
    isolation and numpy, for systems whose leading coefficients in X2 are
    constant and whose solutions have distinct abscissas.
    """
    fx, gx = f.as_expr(), g.as_expr()
    eliminated = sympy.Poly(sympy.resultant(fx, gx, X2), X1)
    abscissas = sorted(set(round(float(root.evalf(30)), 12) for root in eliminated.real_roots()))
    points = []
    for x in abscissas:
        value = sympy.Float(x, 30)
        f_roots = np.roots([float(c) for c in sympy.Poly(fx.subs(X1, value), X2).all_coeffs()])
        g_roots = np.roots([float(c) for c in sympy.Poly(gx.subs(X1, value), X2).all_coeffs()])
        for y in f_roots:
            if abs(y.imag) < 1e-7 and any(abs(y - other) < 1e-6 for other in g_roots):
                points.append((x, y.real))
    return points


def dense_curve(rng, degree):
    terms = {}
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            terms[(0, i, j)] = rng.randint(-5, 5)
    terms[(0, 0, degree)] = rng.choice([-3, -2, -1, 1, 2, 3])
    return Polynomial.from_terms(terms)


class TestSolveAgainstOracles(SimpleTestCase):

    def assertMatches(self, solutions, expected, places):
        self.assertEqual(len(solutions), len(expected))
        for x, y in expected:
            distance = min(max(abs(point.approx[0] - x), abs(point.approx[1] - y)) for point in solutions)
            self.assertLess(distance, 10 ** -places, (x, y))

    def test_dense_random_systems(self):
        rng = random.Random(41)
        checked = 0
        while checked < 20:
            f, g = dense_curve(rng, rng.randint(2, 3)), dense_curve(rng, rng.randint(1, 3))
            try:
                solutions = solve_system(f, g)
            except CommonComponentError:
                continue
            self.assertMatches(solutions, oracle_solutions(f, g), 5)
            checked += 1

    @slow
    def test_ex1_horizontal_tangents(self):
        f = get_entry("ex1").polynomial
        solutions = solve_system(f, f.partial(2))
        self.assertEqual(len(solutions), 6)
        self.assertMatches(solutions, oracle_solutions(f, f.partial(2)), 6)

    def test_ex5_cusps_lie_on_the_circle_over_the_lines(self):
        points = singular_points(get_entry("ex5").polynomial)
        half_root = 3 ** 0.5 / 2
        expected = [(x, 2 + sign * half_root) for x in (3.5, 4.5) for sign in (-1, 1)]
        self.assertMatches(points, expected, 9)
        for point in points:
            self.assertTrue(point.box[0].contains(Fraction(7, 2)) or point.box[0].contains(Fraction(9, 2)))


class TestCuspWitnesses(SimpleTestCase):

    @slow
    def test_ex5_reciprocal_polar(self):
        report = cmd_reciprocal(JobSpec(corpus="ex5"))
        self.assertEqual(report["coverage"]["verdicts"], [VERDICT_ONLY_SINGULAR, VERDICT_ONLY_SINGULAR])
        self.assertEqual(report["exit_code"], EXIT_UNMET)
        reasons = set(entry["reason"] for entry in report["witnesses"]["excluded"])
        self.assertEqual(reasons, set([EXCLUDED_SINGULAR]))
