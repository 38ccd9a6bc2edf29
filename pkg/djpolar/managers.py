# -*- coding: utf-8 -*-

from __future__ import unicode_literals

from django.db import models


class CoverageRunManager(models.Manager):

    def for_curve(self, curve_key):
        """
        Runs recorded for a corpus id or curve text, newest first.

        :param curve_key: corpus id such as ``ex1`` or the polynomial text
        :type curve_key: str
        """
        return self.filter(curve_key=curve_key).order_by("-created", "-pk")

    def latest_for(self, command, curve_key):
        """
        The most recent run of ``command`` on the curve, or None.
        """
        return self.for_curve(curve_key).filter(command=command).first()
