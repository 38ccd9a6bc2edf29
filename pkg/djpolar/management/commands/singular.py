# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from ..base import PolarCommand


class Command(PolarCommand):

    help = "Real singular points of a curve and their classification"
    command_name = "singular"
