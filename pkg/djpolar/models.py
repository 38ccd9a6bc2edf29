# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from django.db import models
from jsonfield import JSONField
from model_utils.models import TimeStampedModel

from .managers import CoverageRunManager
from .utils import COMMAND_CHOICES, EXIT_CODE_CHOICES, EXIT_OK


class CoverageRun(TimeStampedModel):
    """
    A record of one executed job: the command, the curve it ran on, the exit
    code it finished with and the full report.
    """
    command = models.CharField(max_length=20, choices=COMMAND_CHOICES)
    curve_key = models.CharField(max_length=255, db_index=True)
    curve_text = models.TextField(blank=True)
    exit_code = models.PositiveSmallIntegerField(choices=EXIT_CODE_CHOICES, default=EXIT_OK)
    report = JSONField(default=dict, blank=True)

    objects = CoverageRunManager()

    class Meta:
        ordering = ["-created"]

    def str_parts(self):
        return [
            "command={command}".format(command=self.command),
            "curve={key}".format(key=self.curve_key),
            "exit_code={code}".format(code=self.exit_code),
        ]

    def __str__(self):
        return "<{list}>".format(list=", ".join(self.str_parts()))

    @property
    def succeeded(self):
        return self.exit_code == EXIT_OK

    @property
    def verdicts(self):
        return (self.report or {}).get("coverage", {}).get("verdicts", [])
