# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from ...jobs import run_job
from ..base import PolarCommand


class Command(PolarCommand):

    help = "Check the documented facts of the built-in curves"
    command_name = "verify"

    def add_arguments(self, parser):
        parser.add_argument("--corpus", nargs="+", default=["all"], help="'all' or corpus ids")
        parser.add_argument("--skip-slow", action="store_true", help="leave out the degree 12 curves")
        parser.add_argument("--out", help="write the report to this path instead of stdout")
        parser.add_argument("--save", action="store_true", default=None,
                            help="record the run as a CoverageRun")

    def run(self, options):
        keys = None if options["corpus"] == ["all"] else options["corpus"]
        return run_job(self.command_name, keys, save=options.get("save"), out=options.get("out"),
                       skip_slow=options["skip_slow"])
