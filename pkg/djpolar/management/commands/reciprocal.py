# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from ..base import PolarCommand


class Command(PolarCommand):

    help = "Reciprocal polar witnesses of a curve with respect to a quadric"
    command_name = "reciprocal"

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument("--quadric", help="'standard' or a quadratic form in X0, X1, X2")
        parser.add_argument("--center", help="x,y: use the quadric whose centre is this point")
