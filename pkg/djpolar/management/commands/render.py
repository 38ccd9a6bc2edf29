# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from ..base import PolarCommand


class Command(PolarCommand):

    help = "Draw a curve, optionally with a polar and its witnesses, as an SVG figure"
    command_name = "render"

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument("--svg", help="path of the SVG file to write")
        parser.add_argument("--overlay", choices=["polar", "reciprocal"], help="polar curve drawn on top")
        parser.add_argument("--direction", help="a,b for the flag point of the classical polar")
        parser.add_argument("--quadric", help="'standard' or a quadratic form for the reciprocal polar")
        parser.add_argument("--center", help="x,y: centre of the quadric for the reciprocal polar")
