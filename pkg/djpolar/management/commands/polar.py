# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from ..base import PolarCommand


class Command(PolarCommand):

    help = "Classical polar witnesses of a curve and the components they cover"
    command_name = "polar"

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument("--direction", help="a,b for the flag point (0:a:b) at infinity (default 0,1)")
