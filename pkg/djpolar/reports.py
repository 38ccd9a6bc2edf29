# -*- coding: utf-8 -*-
"""
.. module:: djpolar.reports
   :synopsis: dj-polar - the structured report written by every job

A report is a JSON document of nested mappings and lists. Exact rationals
are written as ``"p/q"`` strings, algebraic coordinates with sympy's
printer, and floating values (approximations, distances) rounded to twelve
significant digits so that identical jobs give byte-identical reports.
The schema is documented in ``docs/reports.rst``.
"""
from __future__ import unicode_literals

from fractions import Fraction
import io
import json
import logging

from django.core.serializers.json import DjangoJSONEncoder
import sympy

from .polynomials import Interval
from .utils import format_fraction

logger = logging.getLogger(__name__)

APPROX_DIGITS = 12


class ReportEncoder(DjangoJSONEncoder):
    """Adds Fractions, Intervals and sympy numbers to Django's encoder."""

    def default(self, o):
        if isinstance(o, Fraction):
            return format_fraction(o)
        if isinstance(o, Interval):
            return [format_fraction(o.lo), format_fraction(o.hi)]
        if isinstance(o, sympy.Basic):
            return sympy.sstr(o)
        return super(ReportEncoder, self).default(o)


def approx(value):
    if value is None:
        return None
    return float("{0:.{1}g}".format(float(value), APPROX_DIGITS))


def box_entry(box):
    return [[format_fraction(side.lo), format_fraction(side.hi)] for side in box]


def point_entry(point):
    entry = {
        "box": box_entry(point.box),
        "approx": [approx(c) for c in point.approx],
        "multiplicity_hint": point.multiplicity_hint,
        "certificate": point.certificate,
    }
    if point.shear:
        entry["shear"] = format_fraction(point.shear)
    return entry


def excluded_entry(point, reason):
    entry = point_entry(point)
    entry["reason"] = reason
    return entry


def solution_entry(solutions):
    return {
        "points": [point_entry(point) for point in solutions],
        "excluded": [excluded_entry(point, reason) for point, reason in solutions.excluded],
        "bezout_bound": solutions.bezout,
    }


def singularity_entry(report):
    coordinates = report.coordinates
    return {
        "kind": str(report.kind),
        "multiplicity": report.multiplicity,
        "branches": report.branches,
        "directions": [
            {"direction": str(direction), "multiplicity": multiplicity}
            for direction, multiplicity in report.directions
        ],
        "complex_pairs": report.complex_pairs,
        "coordinates": [sympy.sstr(c) for c in coordinates] if coordinates is not None else None,
        "box": box_entry(report.location.box),
    }


def witness_entry(record):
    entry = point_entry(record.point)
    entry["tag"] = record.tag
    if record.distance is not None:
        entry["distance"] = approx(record.distance)
    return entry


def component_entry(component):
    witnesses = [witness_entry(record) for record in component.witnesses]
    entry = {
        "index": component.index,
        "compact": component.compact,
        "cells": component.cells,
        "verdict": component.verdict,
        "witnesses": witnesses,
        "singularities": [str(report.kind) for report in component.singularities],
    }
    if component.extremal is not None:
        low, high = component.extremal
        entry["extremal_witnesses"] = [witness_entry(low), witness_entry(high)]
    if component.nearest is not None:
        entry["nearest_witness"] = witness_entry(component.nearest)
    return entry


def coverage_entry(coverage):
    return {
        "components": [component_entry(component) for component in coverage.components],
        "checklist": dict(coverage.checklist),
        "verdicts": coverage.verdicts,
        "all_covered": coverage.all_covered,
        "hypotheses_met": coverage.hypotheses_met,
        "unassigned": [excluded_entry(point, reason) for point, reason in coverage.unassigned],
    }


def component_map_entry(cmap, cells=False):
    entry = {
        "box": box_entry(cmap.box),
        "resolution": cmap.resolution,
        "count": len(cmap),
        "compact": list(cmap.compact),
        "cells": [len(group) for group in cmap.components],
        "discarded": sum(len(group) for group in cmap.discarded),
        "carrying_area": format_fraction(cmap.carrying_area()),
    }
    if cells:
        entry["cover"] = [sorted([list(cell) for cell in group]) for group in cmap.components]
    return entry


def sector_entry(sector):
    return {"start": approx(sector.start), "extent": approx(sector.extent)}


def dumps(report):
    return json.dumps(report, cls=ReportEncoder, sort_keys=True, indent=2) + "\n"


def loads(text):
    return json.loads(text)


def normalize(report):
    """The report as it reads back from disk: plain JSON types only."""
    return loads(dumps(report))


def write(report, path):
    with io.open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(report))
    logger.info("report written to %s", path)


def read(path):
    with io.open(path, encoding="utf-8") as handle:
        return loads(handle.read())


def summary(report):
    """A few human-readable lines describing a report."""
    command = report.get("command")
    lines = []
    if "curve" in report:
        lines.append("{0} on {1} (degree {2})".format(command, report["curve"]["key"], report["curve"]["degree"]))
    if "coverage" in report:
        coverage = report["coverage"]
        lines.append("{0} witnesses, polar degree {1}, Bezout bound {2}".format(
            len(report["witnesses"]["points"]), report["polar"]["degree"], report["polar"]["bezout_bound"]))
        for component in coverage["components"]:
            lines.append("  component {0}: {1}".format(component["index"], component["verdict"]))
        unmet = [name for name, value in sorted(coverage["checklist"].items()) if value is False]
        if unmet:
            lines.append("unmet hypotheses: {0}".format(", ".join(unmet)))
    elif command == "singular":
        for entry in report["singularities"]:
            lines.append("  {0} at ({1})".format(entry["kind"], ", ".join(entry["coordinates"] or ["?", "?"])))
    elif command == "components":
        lines.append("{0} components at resolution {1}".format(
            report["components"]["count"], report["components"]["resolution"]))
        if "stable" in report:
            lines.append("stable under refinement: {0}".format("yes" if report["stable"] else "no"))
    elif command == "render":
        lines.append("figure written to {0}".format(report["svg"]))
    elif command == "verify":
        for entry in report["entries"]:
            failed = [fact["fact"] for fact in entry["facts"] if not fact["passed"]]
            lines.append("{0}: {1}".format(entry["key"], "ok" if not failed else "FAILED " + ", ".join(failed)))
    lines.append("exit code {0}".format(report["exit_code"]))
    return lines
