# -*- coding: utf-8 -*-
"""
.. module:: djpolar.rendering
   :synopsis: dj-polar - SVG figures of curves, polars and witnesses

Curves are drawn from the cells of their component maps, so a figure shows
exactly the cover the topology was computed on. The polar (classical or
reciprocal) goes in a second layer, witnesses are coloured by their tag,
certified nonsingular or singular, and singular points are marked with a
cross.
"""
from __future__ import unicode_literals

import io
import logging

from django.template.loader import render_to_string

from . import settings as djpolar_settings

logger = logging.getLogger(__name__)

TEMPLATE_NAME = "djpolar/figure.svg"
MARKER_RADIUS = 4.0


class Viewport(object):
    """Maps the box onto a ``size`` pixel canvas with one scale for both axes."""

    def __init__(self, box, size=None):
        size = size or djpolar_settings.SVG_SIZE
        self.x_side, self.y_side = box
        self.scale = float(size) / float(max(self.x_side.width, self.y_side.width))
        self.width = float(self.x_side.width) * self.scale
        self.height = float(self.y_side.width) * self.scale

    def x(self, value):
        return (float(value) - float(self.x_side.lo)) * self.scale

    def y(self, value):
        return (float(self.y_side.hi) - float(value)) * self.scale

    def contains(self, x, y):
        return 0 <= self.x(x) <= self.width and 0 <= self.y(y) <= self.height

    def axes(self):
        lines = []
        if self.x_side.contains(0):
            lines.append((self.x(0), 0.0, self.x(0), self.height))
        if self.y_side.contains(0):
            lines.append((0.0, self.y(0), self.width, self.y(0)))
        return lines


def cell_rects(cmap, viewport):
    rects = []
    for cell in sorted(cmap.cells):
        bx, by = cmap.cell_box(cell)
        rects.append((viewport.x(bx.lo), viewport.y(by.hi),
                      float(bx.width) * viewport.scale, float(by.width) * viewport.scale))
    return rects


def markers(points, viewport):
    """``points`` yields (x, y, tag) triples in curve coordinates."""
    return [
        {"x": viewport.x(x), "y": viewport.y(y), "tag": tag}
        for x, y, tag in points
        if viewport.contains(x, y)
    ]


def figure_context(cmap, overlay=None, witnesses=(), singularities=(), title="", size=None):
    viewport = Viewport(cmap.box, size)
    return {
        "title": title,
        "width": viewport.width,
        "height": viewport.height,
        "axes": viewport.axes(),
        "curve_cells": cell_rects(cmap, viewport),
        "overlay_cells": cell_rects(overlay, viewport) if overlay is not None else [],
        "witnesses": markers(witnesses, viewport),
        "singularities": markers(singularities, viewport),
        "marker_radius": MARKER_RADIUS,
        "marker_span": 2 * MARKER_RADIUS,
    }


def render_figure(cmap, overlay=None, witnesses=(), singularities=(), title="", size=None):
    return render_to_string(TEMPLATE_NAME, figure_context(cmap, overlay, witnesses, singularities, title, size))


def write_figure(path, *args, **kwargs):
    svg = render_figure(*args, **kwargs)
    with io.open(path, "w", encoding="utf-8") as handle:
        handle.write(svg)
    logger.info("figure written to %s", path)
    return svg
