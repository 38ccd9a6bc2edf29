# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from django.core.management.base import BaseCommand, CommandError

from ..exceptions import PolarError
from ..jobs import JobSpec, run_job
from ..reports import dumps, summary
from ..utils import EXIT_UNMET


class PolarCommand(BaseCommand):
    """
    Shared surface of the curve commands: one curve source, box and
    resolution overrides, and the report outputs.
    """

    command_name = None

    def add_arguments(self, parser):
        parser.add_argument("--curve", help="polynomial text in X1, X2 (or x, y), or homogeneous in X0, X1, X2")
        parser.add_argument("--corpus", help="id of a built-in curve such as ex1 or counterexample-h")
        parser.add_argument("--box", help="x0,x1,y0,y1 with exact numbers")
        parser.add_argument("--resolution", type=int, help="grid resolution, a power of two")
        parser.add_argument("--out", help="write the report to this path instead of stdout")
        parser.add_argument("--save", action="store_true", default=None,
                            help="record the run as a CoverageRun")

    def run(self, options):
        spec = JobSpec.from_options(options)
        return run_job(self.command_name, spec)

    def handle(self, *args, **options):
        try:
            report = self.run(options)
        except PolarError as exc:
            raise CommandError("{0}: {1}".format(exc.__class__.__name__, exc))

        if options.get("out"):
            if options["verbosity"] > 0:
                for line in summary(report):
                    self.stdout.write(line)
        else:
            self.stdout.write(dumps(report), ending="")

        if report["exit_code"] == EXIT_UNMET:
            raise CommandError("Computed, but hypotheses are unmet or a component is not covered",
                               returncode=EXIT_UNMET)
