"""
.. module:: dj-polar.tests.test_rendering
   :synopsis: dj-polar SVG figure Tests.

"""
import os
import shutil
import tempfile

from django.test import SimpleTestCase

from djpolar.rendering import Viewport, cell_rects, figure_context, markers, render_figure, write_figure
from djpolar.topology import component_map, fraction_box

from . import CIRCLE, curve

BOX = fraction_box((-2, 2, -1, 1))


class TestViewport(SimpleTestCase):

    def test_one_scale_for_both_axes(self):
        viewport = Viewport(BOX, 400)
        self.assertEqual(viewport.scale, 100.0)
        self.assertEqual((viewport.width, viewport.height), (400.0, 200.0))

    def test_y_axis_points_down(self):
        viewport = Viewport(BOX, 400)
        self.assertEqual(viewport.x(-2), 0.0)
        self.assertEqual(viewport.y(1), 0.0)
        self.assertEqual(viewport.y(-1), 200.0)

    def test_axes(self):
        self.assertEqual(Viewport(BOX, 400).axes(), [(200.0, 0.0, 200.0, 200.0), (0.0, 100.0, 400.0, 100.0)])
        self.assertEqual(Viewport(fraction_box((1, 2, 1, 2)), 10).axes(), [])

    def test_markers_outside_are_dropped(self):
        viewport = Viewport(BOX, 400)
        points = markers([(0.0, 0.0, "nonsingular"), (5.0, 0.0, "nonsingular")], viewport)
        self.assertEqual(points, [{"x": 200.0, "y": 100.0, "tag": "nonsingular"}])


class TestFigure(SimpleTestCase):

    def setUp(self):
        self.cmap = component_map(curve(CIRCLE), fraction_box((-2, 2, -2, 2)), 32)
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_context(self):
        context = figure_context(self.cmap, title="circle", size=200)
        self.assertEqual(len(context["curve_cells"]), len(self.cmap.cells))
        self.assertEqual(context["overlay_cells"], [])
        self.assertEqual(context["curve_cells"], cell_rects(self.cmap, Viewport(self.cmap.box, 200)))

    def test_render(self):
        svg = render_figure(self.cmap, witnesses=[(1.0, 0.0, "nonsingular")], singularities=[(0.0, 0.0, "singular")],
                            title="circle", size=200)
        self.assertTrue(svg.startswith("<?xml"))
        self.assertIn("<title>circle</title>", svg)
        self.assertEqual(svg.count("<circle "), 1)
        self.assertIn('fill="#1a7f37"', svg)
        self.assertEqual(svg.count("<path "), 1)
        self.assertNotIn('id="overlay"', svg)

    def test_overlay(self):
        overlay = component_map(curve("y"), fraction_box((-2, 2, -2, 2)), 32)
        svg = render_figure(self.cmap, overlay, size=200)
        self.assertIn('id="overlay"', svg)

    def test_write_is_deterministic(self):
        path = os.path.join(self.directory, "circle.svg")
        first = write_figure(path, self.cmap, title="circle", size=200)
        with open(path) as handle:
            self.assertEqual(handle.read(), first)
        self.assertEqual(write_figure(path, self.cmap, title="circle", size=200), first)
