# -*- coding: utf-8 -*-
"""
Job lifecycle signals.

``job_started``, ``job_finished`` and ``job_failed`` are sent with the
running :class:`djpolar.jobs.Job` as ``job``; ``job_finished`` carries the
report dictionary and ``job_failed`` the exception. ``coverage_verified``
is sent once per polar or reciprocal coverage computation with the curve
key and the coverage section of the report.
"""
from django.dispatch import Signal


job_started = Signal()
job_finished = Signal()
job_failed = Signal()
coverage_verified = Signal()
