# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from ..base import PolarCommand


class Command(PolarCommand):

    help = "Connected components of the real curve inside a box"
    command_name = "components"

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument("--compare", action="store_true",
                            help="also compute the map at twice the resolution and compare counts")
        parser.add_argument("--sectors", action="store_true",
                            help="report the sampled Gauss sectors of every component")
