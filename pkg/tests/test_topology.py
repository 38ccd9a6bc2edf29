"""
.. module:: dj-polar.tests.test_topology
   :synopsis: dj-polar component map and coverage Tests.

"""
from fractions import Fraction

from django.core.exceptions import ImproperlyConfigured
from django.test import SimpleTestCase

from djpolar.corpus import get_entry
from djpolar.exceptions import NotOnCurve
from djpolar.polars import Flag2D, Quadric, affine_classical_polar, affine_reciprocal_polar
from djpolar.polynomials import Interval
from djpolar.singularities import classify
from djpolar.solving import EXCLUDED_SINGULAR, singular_points, solve_system
from djpolar.topology import (TAG_NONSINGULAR, TAG_SINGULAR, Sector, _merge_angles, assign, compare_resolutions,
                              component_map, default_box, exclude_singular, fraction_box, gauss_sector_scan,
                              polar_direction_hits, verify_coverage)
from djpolar.utils import VERDICT_COVERED, VERDICT_ONLY_SINGULAR, VERDICT_UNCOVERED

from . import CIRCLE, ELLIPSE, NODAL_CUBIC, TWO_CIRCLES, curve, slow

SQUARE = fraction_box((-2, 2, -2, 2))


class TestComponentMap(SimpleTestCase):

    def test_circle(self):
        cmap = component_map(curve(CIRCLE), SQUARE, 64)
        self.assertEqual(len(cmap), 1)
        self.assertEqual(cmap.compact, [True])
        self.assertEqual(cmap.step, (Fraction(1, 16), Fraction(1, 16)))

    def test_cells_carry_the_curve(self):
        f = curve(CIRCLE)
        cmap = component_map(f, SQUARE, 32)
        for slope in ("0", "1/3", "-2", "7/5"):
            for point in solve_system(f, curve("y - {0}*x".format(slope))):
                self.assertTrue(cmap.cells_meeting(point.box))

    def test_cells_near_a_positive_minimum_are_discarded(self):
        cmap = component_map(curve("x^2 + x*y + y^2 + 1/1000000"), fraction_box((-1, 1, -1, 1)), 2)
        self.assertEqual(len(cmap), 0)
        self.assertTrue(cmap.discarded)
        self.assertEqual(cmap.cells, frozenset())

    def test_isolated_point_needs_an_anchor(self):
        f, box = curve("x^2 + y^2"), fraction_box((-1, 2, -1, 2))
        self.assertEqual(len(component_map(f, box, 2)), 0)
        anchored = component_map(f, box, 2, anchors=[(Interval(0), Interval(0))])
        self.assertEqual(len(anchored), 1)
        self.assertEqual(anchored.compact, [False])

    def test_two_circles(self):
        cmap = component_map(curve(TWO_CIRCLES), fraction_box((-3, 7, -3, 7)), 128)
        self.assertEqual(len(cmap), 2)
        self.assertEqual(cmap.compact, [True, True])

    def test_line_is_not_compact(self):
        cmap = component_map(curve("y - x + 1/3"), SQUARE, 32)
        self.assertEqual(len(cmap), 1)
        self.assertEqual(cmap.compact, [False])

    def test_curve_outside_the_box(self):
        cmap = component_map(curve("x^2 + y^2 - 100"), SQUARE, 16)
        self.assertEqual(len(cmap), 0)
        self.assertEqual(cmap.carrying_area(), 0)

    def test_resolution_must_be_a_power_of_two(self):
        self.assertRaises(ImproperlyConfigured, component_map, curve(CIRCLE), SQUARE, 100)

    def test_stable_count(self):
        coarse, finer = compare_resolutions(curve(CIRCLE), SQUARE, 32)
        self.assertEqual((len(coarse), len(finer)), (1, 1))
        self.assertEqual(finer.resolution, 64)

    def test_two_circles_stable_under_refinement(self):
        coarse, finer = compare_resolutions(curve(TWO_CIRCLES), fraction_box((-3, 7, -3, 7)), 256)
        self.assertEqual((len(coarse), len(finer)), (2, 2))

    @slow
    def test_counterexample_stable_under_refinement(self):
        entry = get_entry("counterexample-h")
        coarse, finer = compare_resolutions(entry.polynomial, entry.box, entry.resolution)
        self.assertEqual((len(coarse), len(finer)), (4, 4))

    def test_cells_meeting(self):
        cmap = component_map(curve(CIRCLE), SQUARE, 32)
        near = cmap.cells_meeting((Interval("999/1000", "1001/1000"), Interval("-1/1000", "1/1000")))
        self.assertTrue(near)
        self.assertEqual(cmap.cells_meeting((Interval(5, 6), Interval(5, 6))), [])


class TestAssign(SimpleTestCase):

    def test_points_on_the_curve(self):
        f = curve(TWO_CIRCLES)
        cmap = component_map(f, fraction_box((-3, 7, -3, 7)), 64)
        points = solve_system(f, curve("2*y - x"))
        self.assertEqual(len(points), 4)
        self.assertEqual(sorted(assign(point, cmap) for point in points), [0, 0, 1, 1])

    def test_point_off_the_curve(self):
        cmap = component_map(curve(CIRCLE), fraction_box((-3, 3, -3, 3)), 64)
        point = solve_system(curve("x^2 + y^2 - 4"), curve("x - y"))[0]
        self.assertRaises(NotOnCurve, assign, point, cmap)


class TestVerifyCoverage(SimpleTestCase):

    def test_reciprocal_on_ellipse(self):
        f = curve(ELLIPSE)
        quadric = Quadric.standard()
        witnesses = solve_system(f, affine_reciprocal_polar(f, quadric))
        cmap = component_map(f, fraction_box((-3, 3, -3, 3)), 64)
        coverage = verify_coverage(f, witnesses, [], cmap, quadric=quadric)
        self.assertEqual(coverage.verdicts, [VERDICT_COVERED])
        self.assertTrue(coverage.all_covered)
        self.assertTrue(coverage.hypotheses_met)
        self.assertEqual(len(coverage.components[0].witnesses), 4)
        self.assertAlmostEqual(coverage.components[0].nearest.distance, 1.0)
        self.assertTrue(coverage.checklist["center_off_curve"])
        self.assertTrue(coverage.checklist["distance_like"])

    def test_extremal_witnesses(self):
        f = curve(CIRCLE)
        flag = Flag2D.from_direction(0, 1)
        witnesses = solve_system(f, affine_classical_polar(f, flag))
        coverage = verify_coverage(f, witnesses, [], component_map(f, SQUARE, 32), flag=flag)
        low, high = coverage.components[0].extremal
        self.assertAlmostEqual(low.point.approx[0], -1.0)
        self.assertAlmostEqual(high.point.approx[0], 1.0)
        self.assertEqual(low.tag, TAG_NONSINGULAR)
        self.assertIsNone(coverage.checklist["distance_like"])

    def test_only_singular_witnesses(self):
        f = curve("x*y")
        singulars = [classify(f, point) for point in singular_points(f)]
        coverage = verify_coverage(f, singular_points(f), singulars, component_map(f, SQUARE, 32))
        self.assertEqual(coverage.verdicts, [VERDICT_ONLY_SINGULAR])
        self.assertEqual(coverage.components[0].witnesses[0].tag, TAG_SINGULAR)
        self.assertEqual(len(coverage.components[0].singularities), 1)
        self.assertTrue(coverage.checklist["ordinary_singularities"])
        self.assertFalse(coverage.checklist["compact"])
        self.assertFalse(coverage.hypotheses_met)

    def test_singular_witnesses_are_excluded(self):
        f = curve(NODAL_CUBIC)
        singulars = [classify(f, point) for point in singular_points(f)]
        solutions = exclude_singular(f, solve_system(f, f.partial(2)), singulars)
        self.assertEqual(len(solutions), 1)
        self.assertTrue(solutions[0].contains(-1, 0))
        (point, reason), = solutions.excluded
        self.assertTrue(point.contains(0, 0))
        self.assertEqual(reason, EXCLUDED_SINGULAR)
        coverage = verify_coverage(f, solutions, singulars, component_map(f, SQUARE, 32))
        self.assertEqual(sorted(w.tag for w in coverage.components[0].witnesses), [TAG_NONSINGULAR, TAG_SINGULAR])
        self.assertEqual(coverage.verdicts, [VERDICT_COVERED])

    def test_uncovered(self):
        f = curve(TWO_CIRCLES)
        cmap = component_map(f, fraction_box((-3, 7, -3, 7)), 64)
        witnesses = solve_system(f, curve("y"))
        coverage = verify_coverage(f, witnesses, [], cmap)
        self.assertEqual(sorted(coverage.verdicts), [VERDICT_COVERED, VERDICT_UNCOVERED])
        self.assertFalse(coverage.all_covered)


class TestGaussSectors(SimpleTestCase):

    def test_sector_contains(self):
        sector = Sector(150, 60)
        self.assertTrue(sector.contains(10))
        self.assertFalse(sector.contains(90))
        self.assertTrue(Sector(0, 180).is_full)

    def test_merge_angles(self):
        self.assertEqual(_merge_angles([], 12.0), [])
        sectors = _merge_angles([10.0, 15.0, 20.0, 100.0, 105.0], 12.0)
        self.assertEqual([(s.start, s.extent) for s in sectors], [(10.0, 10.0), (100.0, 5.0)])

    def test_circle_has_every_normal(self):
        f = curve(CIRCLE)
        sectors = gauss_sector_scan(f, component_map(f, SQUARE, 64), 0)
        self.assertEqual(len(sectors), 1)
        self.assertTrue(sectors[0].is_full)

    def test_polar_direction_hits(self):
        sectors = {0: [Sector(150, 60)], 1: [Sector(60, 60)]}
        self.assertEqual(polar_direction_hits(sectors, 0, 1), [0])
        self.assertEqual(polar_direction_hits(sectors, 1, 0), [1])


class TestBoxes(SimpleTestCase):

    def test_fraction_box(self):
        self.assertEqual(fraction_box(("-1", "1/2", 0, 2)), (Interval(-1, "1/2"), Interval(0, 2)))

    def test_default_box_holds_extra_points(self):
        f = curve(CIRCLE)
        far = solve_system(curve("x - 5"), curve("y - 5"))
        x, y = default_box(f, far)
        self.assertTrue(x.contains(Interval(-1, 6)))
        self.assertTrue(y.contains(Interval(-1, 6)))
