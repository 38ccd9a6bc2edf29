# -*- coding: utf-8 -*-
"""
.. module:: djpolar.jobs
   :synopsis: dj-polar - the operations behind the management commands

Every command builds a :class:`JobSpec` from its options and hands it to
:func:`run_job`, which sends the lifecycle signals, writes the report and
optionally records a :class:`djpolar.models.CoverageRun`. The ``cmd_*``
functions do the work and return plain report dictionaries carrying an
``exit_code``.
"""
from __future__ import unicode_literals

from collections import OrderedDict
from fractions import Fraction
import logging
import math

from django.core.exceptions import ImproperlyConfigured

from . import reports, signals
from . import settings as djpolar_settings
from .corpus import entries, get_entry
from .exceptions import CenterOnCurve, DegeneratePolar, JobSpecError, PolarError
from .models import CoverageRun
from .polars import (Flag2D, ProjPoint, Quadric, affine_classical_polar, affine_reciprocal_polar,
                     bezout_bound, quadric_for_center)
from .polynomials import HOMOGENEOUS, parse
from .rendering import write_figure
from .singularities import classify
from .solving import SolutionSet, singular_points, solve_system
from .topology import (TAG_NONSINGULAR, TAG_SINGULAR, compare_resolutions, component_map, default_box,
                       exclude_singular, fraction_box, gauss_sector_scan, polar_direction_hits, verify_coverage)
from .utils import EXIT_ERROR, EXIT_OK, EXIT_UNMET, VERDICT_COVERED, to_fraction

logger = logging.getLogger(__name__)

OVERLAY_POLAR = "polar"
OVERLAY_RECIPROCAL = "reciprocal"
OVERLAY_CHOICES = (OVERLAY_POLAR, OVERLAY_RECIPROCAL)

SWEEP_DIRECTIONS = 360
SWEEP_SCALE = 1000
CENTER_CANDIDATES = [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (-1, 1), (1, -1), (-1, -1), (2, 0), (0, 2)]


def parse_numbers(text, count, name):
    """'1,0' -> (Fraction(1), Fraction(0)); exactly ``count`` entries."""
    values = list(text) if isinstance(text, (tuple, list)) else str(text).split(",")
    if len(values) != count:
        raise JobSpecError("--{0} expects {1} comma-separated numbers, got {2!r}".format(name, count, text))
    try:
        return tuple(to_fraction(value) for value in values)
    except (TypeError, ValueError, ZeroDivisionError):
        raise JobSpecError("--{0} expects exact numbers such as 1/2, got {1!r}".format(name, text))


class JobSpec(object):
    """
    Everything a job needs: exactly one curve source, the flag direction,
    the quadric (``standard``, polynomial text, or built around ``center``)
    and the box, resolution and output overrides.
    """

    def __init__(self, curve=None, corpus=None, direction=(0, 1), center=None, quadric=None,
                 box=None, resolution=None, out=None, svg=None, save=None, overlay=None,
                 compare=False, sectors=False):
        if (curve is None) == (corpus is None):
            raise JobSpecError("Give exactly one of --curve and --corpus")
        if center is not None and quadric is not None:
            raise JobSpecError("--center builds its own quadric; do not combine it with --quadric")
        if overlay is not None and overlay not in OVERLAY_CHOICES:
            raise JobSpecError("--overlay must be one of {0}".format(", ".join(OVERLAY_CHOICES)))
        self.curve = curve
        self.corpus = corpus
        self.direction = parse_numbers(direction, 2, "direction")
        if not any(self.direction):
            raise JobSpecError("--direction cannot be 0,0")
        self.center = parse_numbers(center, 2, "center") if center is not None else None
        self.quadric = quadric
        self.box = None
        if box is not None:
            x0, x1, y0, y1 = parse_numbers(box, 4, "box")
            if x0 >= x1 or y0 >= y1:
                raise JobSpecError("--box needs x0 < x1 and y0 < y1")
            self.box = fraction_box((x0, x1, y0, y1))
        self.resolution = resolution
        self.out = out
        self.svg = svg
        self.save = djpolar_settings.SAVE_RUNS if save is None else save
        self.overlay = overlay
        self.compare = compare
        self.sectors = sectors
        self._polynomial = None

    @classmethod
    def from_options(cls, options):
        """Builds a spec from management command options, ignoring Django's own."""
        fields = ("curve", "corpus", "direction", "center", "quadric", "box", "resolution", "out",
                  "svg", "save", "overlay", "compare", "sectors")
        kwargs = dict((name, options[name]) for name in fields if options.get(name) is not None)
        return cls(**kwargs)

    @property
    def entry(self):
        return get_entry(self.corpus) if self.corpus is not None else None

    @property
    def key(self):
        return self.corpus if self.corpus is not None else self.curve

    @property
    def polynomial(self):
        if self._polynomial is None:
            if self.corpus is not None:
                self._polynomial = self.entry.polynomial
            else:
                f = parse(self.curve)
                self._polynomial = f.dehomogenize() if f.nvars == HOMOGENEOUS else f
        return self._polynomial

    @property
    def flag(self):
        return Flag2D.from_direction(*self.direction)

    def get_quadric(self):
        if self.center is not None:
            return quadric_for_center(ProjPoint.from_affine(*self.center))
        if self.quadric is not None:
            return Quadric.from_text(self.quadric)
        return Quadric.standard()

    def get_resolution(self):
        resolution = self.resolution
        if resolution is None and self.corpus is not None:
            resolution = self.entry.resolution
        try:
            return djpolar_settings.validate_resolution(resolution or djpolar_settings.DEFAULT_RESOLUTION)
        except ImproperlyConfigured as exc:
            raise JobSpecError(str(exc))

    def get_box(self, extra_points=()):
        if self.box is not None:
            return self.box
        if self.corpus is not None:
            return self.entry.box
        return default_box(self.polynomial, extra_points)

    def as_dict(self):
        entry = OrderedDict([("key", self.key), ("direction", list(self.direction))])
        if self.center is not None:
            entry["center"] = list(self.center)
        if self.quadric is not None:
            entry["quadric"] = self.quadric
        if self.resolution is not None:
            entry["resolution"] = self.resolution
        return entry

    def __repr__(self):
        return "JobSpec({0})".format(self.key)


class Job(object):
    """One invocation; ``spec`` is a JobSpec, or a list of corpus keys for ``verify``."""

    def __init__(self, command, spec):
        self.command = command
        self.spec = spec
        self.report = None
        self.exit_code = None

    @property
    def key(self):
        if isinstance(self.spec, JobSpec):
            return self.spec.key
        return ",".join(self.spec or ["all"])

    @property
    def curve_text(self):
        if isinstance(self.spec, JobSpec) and self.spec.curve is not None:
            return self.spec.curve
        return ""

    def __repr__(self):
        return "Job({0} on {1})".format(self.command, self.key)


def _curve_entry(f, spec):
    return {"key": spec.key, "polynomial": str(f), "degree": f.degree}


def _classified_singularities(f):
    return [classify(f, point) for point in singular_points(f)]


def _anchors(singularities):
    return [report.location.box for report in singularities]


def polar_witnesses(f, flag, singularities=()):
    """
    The classical polar of f for ``flag`` and its real intersections with f.
    Intersections at the singular points in ``singularities`` are moved to
    the excluded points of the solution set.
    """
    polar = affine_classical_polar(f, flag)
    return polar, exclude_singular(f, solve_system(f, polar), singularities)


def suggest_center(f):
    """A small integral centre off the curve whose quadric gives a nonzero reciprocal polar."""
    for x, y in CENTER_CANDIDATES:
        if f.eval_rat((x, y)) == 0:
            continue
        candidate = quadric_for_center(ProjPoint.from_affine(x, y))
        if not affine_reciprocal_polar(f, candidate).is_zero:
            return (Fraction(x), Fraction(y)), candidate
    return None, None


def check_center(f, quadric):
    """Raises CenterOnCurve when the polar point of the line at infinity lies on V(f)."""
    center = quadric.center()
    if center.is_at_infinity or f.eval_rat(center.affine()) != 0:
        return
    suggestion, candidate = suggest_center(f)
    message = "The centre {0} of the quadric {1} lies on the curve".format(center, quadric)
    if suggestion is not None:
        message += "; a quadric centred off the curve exists, e.g. --center {0},{1} gives {2}".format(
            suggestion[0], suggestion[1], candidate)
    raise CenterOnCurve(message, center=suggestion, quadric=candidate)


def reciprocal_witnesses(f, quadric, singularities=()):
    """The reciprocal polar of f for ``quadric`` and its real intersections with f."""
    check_center(f, quadric)
    polar = affine_reciprocal_polar(f, quadric)
    if polar.is_zero:
        raise DegeneratePolar("The reciprocal polar of {0} with respect to {1} vanishes identically".format(
            f, quadric))
    return polar, exclude_singular(f, solve_system(f, polar), singularities)


def coverage_of(f, solutions, singularities, cmap, flag=None, quadric=None):
    """Coverage verdicts for the witnesses lying in the box of ``cmap``."""
    return verify_coverage(f, solutions.within(cmap.box), singularities, cmap, flag=flag, quadric=quadric)


def _coverage_exit_code(coverage):
    return EXIT_OK if coverage.all_covered and coverage.hypotheses_met else EXIT_UNMET


def _coverage_report(command, spec, f, polar, solutions, cmap, coverage, singularities):
    bound = bezout_bound(f, polar)
    if len(solutions) > bound:
        logger.warning("%d witnesses exceed the Bezout bound %d", len(solutions), bound)
    report = {
        "command": command,
        "curve": _curve_entry(f, spec),
        "polar": {"polynomial": str(polar), "degree": polar.degree, "bezout_bound": bound},
        "witnesses": reports.solution_entry(solutions),
        "singularities": [reports.singularity_entry(r) for r in singularities],
        "components": reports.component_map_entry(cmap),
        "coverage": reports.coverage_entry(coverage),
        "exit_code": _coverage_exit_code(coverage),
    }
    signals.coverage_verified.send(sender=Job, curve=spec.key, report=report["coverage"])
    return report


def cmd_polar(spec):
    f = spec.polynomial
    flag = spec.flag
    singularities = _classified_singularities(f)
    polar, solutions = polar_witnesses(f, flag, singularities)
    box = spec.get_box([s.location for s in singularities] + list(solutions))
    cmap = component_map(f, box, spec.get_resolution(), _anchors(singularities))
    coverage = coverage_of(f, solutions, singularities, cmap, flag=flag)
    report = _coverage_report("polar", spec, f, polar, solutions, cmap, coverage, singularities)
    report["flag"] = {"point": str(flag.point), "line": str(flag.line_at_infinity)}
    return report


def cmd_reciprocal(spec):
    f = spec.polynomial
    quadric = spec.get_quadric()
    singularities = _classified_singularities(f)
    polar, solutions = reciprocal_witnesses(f, quadric, singularities)
    box = spec.get_box([s.location for s in singularities] + list(solutions))
    cmap = component_map(f, box, spec.get_resolution(), _anchors(singularities))
    coverage = coverage_of(f, solutions, singularities, cmap, quadric=quadric)
    report = _coverage_report("reciprocal", spec, f, polar, solutions, cmap, coverage, singularities)
    report["quadric"] = {
        "polynomial": str(quadric),
        "center": str(quadric.center()),
        "distance_like": quadric.is_distance_like,
    }
    return report


def cmd_singular(spec):
    f = spec.polynomial
    singularities = _classified_singularities(f)
    kinds = {}
    for report in singularities:
        kinds[str(report.kind)] = kinds.get(str(report.kind), 0) + 1
    return {
        "command": "singular",
        "curve": _curve_entry(f, spec),
        "singularities": [reports.singularity_entry(r) for r in singularities],
        "kinds": kinds,
        "exit_code": EXIT_OK,
    }


def cmd_components(spec):
    f = spec.polynomial
    singularities = singular_points(f)
    box = spec.get_box(list(singularities))
    resolution = spec.get_resolution()
    anchors = [point.box for point in singularities]
    if spec.compare:
        cmap, finer = compare_resolutions(f, box, resolution, anchors)
    else:
        cmap, finer = component_map(f, box, resolution, anchors), None
    report = {
        "command": "components",
        "curve": _curve_entry(f, spec),
        "components": reports.component_map_entry(cmap),
        "exit_code": EXIT_OK,
    }
    if finer is not None:
        report["refined"] = reports.component_map_entry(finer)
        report["stable"] = len(finer) == len(cmap)
        if not report["stable"]:
            report["exit_code"] = EXIT_UNMET
    if spec.sectors:
        report["gauss_sectors"] = [
            [reports.sector_entry(sector) for sector in gauss_sector_scan(f, cmap, index)]
            for index in range(len(cmap))
        ]
    return report


def cmd_render(spec):
    if not spec.svg:
        raise JobSpecError("render needs --svg <path>")
    f = spec.polynomial
    singularities = _classified_singularities(f)
    polar, solutions = None, SolutionSet()
    if spec.overlay == OVERLAY_POLAR:
        polar, solutions = polar_witnesses(f, spec.flag, singularities)
    elif spec.overlay == OVERLAY_RECIPROCAL:
        polar, solutions = reciprocal_witnesses(f, spec.get_quadric(), singularities)

    box = spec.get_box([s.location for s in singularities] + list(solutions))
    resolution = spec.get_resolution()
    cmap = component_map(f, box, resolution, _anchors(singularities))
    overlay = component_map(polar, box, resolution) if polar is not None else None

    witnesses = [point.approx + (TAG_NONSINGULAR,) for point in solutions]
    witnesses += [point.approx + (TAG_SINGULAR,) for point, reason in solutions.excluded]
    crosses = [report.location.approx + (TAG_SINGULAR,) for report in singularities]

    title = "V({0})".format(f)
    if polar is not None:
        title += " and its {0} polar".format(spec.overlay)
    write_figure(spec.svg, cmap, overlay, witnesses, crosses, title)
    return {
        "command": "render",
        "curve": _curve_entry(f, spec),
        "svg": spec.svg,
        "overlay": spec.overlay,
        "components": reports.component_map_entry(cmap),
        "witnesses": len(witnesses),
        "singularities": len(crosses),
        "exit_code": EXIT_OK,
    }


def sweep_directions(count=SWEEP_DIRECTIONS):
    """``count`` integral flag directions (a, b) spread over the half circle, in lowest terms."""
    directions = []
    for k in range(count):
        angle = math.pi * k / count
        a, b = int(round(SWEEP_SCALE * math.cos(angle))), int(round(SWEEP_SCALE * math.sin(angle)))
        divisor = math.gcd(a, b)
        directions.append((a // divisor, b // divisor))
    return directions


def direction_sweep(f, cmap, count=SWEEP_DIRECTIONS):
    """
    For every swept direction, the components whose sampled Gauss image
    contains the flag's normal direction. Returns a list of
    ((a, b), [component indices]). The sectors are not certified.
    """
    sectors = dict((index, gauss_sector_scan(f, cmap, index)) for index in range(len(cmap)))
    return [((a, b), polar_direction_hits(sectors, a, b)) for a, b in sweep_directions(count)]


def coverage_sweep(f, cmap, singularities, count=SWEEP_DIRECTIONS):
    """
    Certified coverage verdicts of the classical polar for every swept
    direction. Returns a list of ((a, b), [verdict per component]).
    """
    results = []
    for a, b in sweep_directions(count):
        flag = Flag2D.from_direction(a, b)
        _, solutions = polar_witnesses(f, flag, singularities)
        verdicts = coverage_of(f, solutions, singularities, cmap, flag=flag).verdicts
        logger.debug("direction (%d, %d): %s", a, b, verdicts)
        results.append(((a, b), verdicts))
    return results


def never_all_covered(f, cmap, singularities, count=SWEEP_DIRECTIONS):
    """
    True when no swept direction covers every component of ``cmap``. The
    sampled Gauss sectors are checked against the certified verdicts and
    disagreements are logged.
    """
    sweep = coverage_sweep(f, cmap, singularities, count)
    for ((a, b), verdicts), (_, hits) in zip(sweep, direction_sweep(f, cmap, count)):
        missed = [index for index, verdict in enumerate(verdicts) if verdict == VERDICT_COVERED and index not in hits]
        if missed:
            logger.warning("Gauss sectors miss covered components %s for direction (%d, %d)", missed, a, b)
    return not any(verdicts and all(v == VERDICT_COVERED for v in verdicts) for _, verdicts in sweep)


class EntryState(object):
    """Lazily computed data of one corpus entry, shared by all its facts."""

    def __init__(self, entry):
        self.entry = entry
        self.f = entry.polynomial
        self._cmap = None
        self._singularities = None
        self._polar = None

    def cmap(self):
        if self._cmap is None:
            self._cmap = component_map(self.f, self.entry.box, self.entry.resolution,
                                       _anchors(self.singularities()))
        return self._cmap

    def singularities(self):
        if self._singularities is None:
            self._singularities = _classified_singularities(self.f)
        return self._singularities

    def polar_solutions(self):
        if self._polar is None:
            self._polar = polar_witnesses(self.f, Flag2D.from_direction(0, 1), self.singularities())[1]
        return self._polar

    def reciprocal_verdicts(self, quadric):
        solutions = reciprocal_witnesses(self.f, quadric, self.singularities())[1]
        return sorted(coverage_of(self.f, solutions, self.singularities(), self.cmap(), quadric=quadric).verdicts)

    def centered_quadric(self):
        return quadric_for_center(ProjPoint.from_affine(*parse_numbers(self.entry.facts["center"], 2, "center")))


def _fact_components(state):
    return len(state.cmap())


def _fact_compact(state):
    return all(state.cmap().compact)


def _fact_singular_kinds(state):
    return sorted(str(report.kind) for report in state.singularities())


def _fact_cusp_directions(state):
    return sorted(str(direction) for report in state.singularities() for direction, _ in report.directions)


def _fact_polar_witnesses(state):
    return len(state.polar_solutions())


def _fact_polar_verdicts(state):
    coverage = coverage_of(state.f, state.polar_solutions(), state.singularities(), state.cmap(),
                           flag=Flag2D.from_direction(0, 1))
    return sorted(coverage.verdicts)


def _fact_polar_never_all_covered(state):
    return never_all_covered(state.f, state.cmap(), state.singularities())


def _fact_reciprocal_verdicts(state):
    return state.reciprocal_verdicts(Quadric.standard())


def _fact_reciprocal_error(state):
    try:
        reciprocal_witnesses(state.f, Quadric.standard())
    except PolarError as exc:
        return exc.__class__.__name__
    return None


def _fact_center(state):
    return ",".join(str(c) for c in parse_numbers(state.entry.facts["center"], 2, "center"))


def _fact_centered_quadric(state):
    return str(state.centered_quadric())


def _fact_centered_verdicts(state):
    return state.reciprocal_verdicts(state.centered_quadric())


FACTS = {
    "components": _fact_components,
    "compact": _fact_compact,
    "singular_kinds": _fact_singular_kinds,
    "cusp_directions": _fact_cusp_directions,
    "polar_witnesses": _fact_polar_witnesses,
    "polar_verdicts": _fact_polar_verdicts,
    "polar_never_all_covered": _fact_polar_never_all_covered,
    "reciprocal_verdicts": _fact_reciprocal_verdicts,
    "reciprocal_error": _fact_reciprocal_error,
    "center": _fact_center,
    "centered_quadric": _fact_centered_quadric,
    "centered_verdicts": _fact_centered_verdicts,
}


def verify_entry(entry):
    """Checks every expected fact of a corpus entry; a failing computation fails its fact only."""
    state = EntryState(entry)
    results = []
    for name, expected in entry.facts.items():
        if name not in FACTS:
            raise JobSpecError("Unknown fact {0!r} for {1}".format(name, entry.key))
        try:
            actual = FACTS[name](state)
        except PolarError as exc:
            actual = "{0}: {1}".format(exc.__class__.__name__, exc)
        passed = reports.normalize(actual) == reports.normalize(expected)
        if not passed:
            logger.warning("%s: fact %s expected %r, got %r", entry.key, name, expected, actual)
        results.append({"fact": name, "expected": expected, "actual": actual, "passed": passed})
    return {
        "key": entry.key,
        "description": entry.description,
        "facts": results,
        "passed": all(result["passed"] for result in results),
    }


def cmd_verify(keys=None, skip_slow=False):
    selected = [entry for entry in entries(keys) if not (skip_slow and entry.slow)]
    results = []
    for entry in selected:
        logger.info("verifying corpus entry %s", entry.key)
        results.append(verify_entry(entry))
    passed = all(result["passed"] for result in results)
    return {
        "command": "verify",
        "entries": results,
        "skipped": [entry.key for entry in entries(keys) if entry not in selected],
        "passed": passed,
        "exit_code": EXIT_OK if passed else EXIT_UNMET,
    }


OPERATIONS = {
    "polar": cmd_polar,
    "reciprocal": cmd_reciprocal,
    "singular": cmd_singular,
    "components": cmd_components,
    "render": cmd_render,
}


def record_run(job, report, exit_code):
    return CoverageRun.objects.create(
        command=job.command,
        curve_key=job.key,
        curve_text=job.curve_text,
        exit_code=exit_code,
        report=reports.normalize(report),
    )


def run_job(command, spec, save=None, out=None, skip_slow=False):
    """
    Runs one operation. ``spec`` is a JobSpec, or the list of corpus keys
    for ``verify``. A failed job is signalled and recorded, then its
    PolarError is raised again; otherwise the report is returned.
    """
    job = Job(command, spec)
    if isinstance(spec, JobSpec):
        save = spec.save if save is None else save
        out = spec.out if out is None else out
    elif save is None:
        save = djpolar_settings.SAVE_RUNS

    logger.info("%r started", job)
    signals.job_started.send(sender=Job, job=job)
    try:
        if command == "verify":
            report = cmd_verify(spec, skip_slow=skip_slow)
        elif command in OPERATIONS:
            report = OPERATIONS[command](spec)
        else:
            raise JobSpecError("Unknown command {0!r}".format(command))
    except PolarError as exc:
        logger.info("%r failed: %s", job, exc)
        job.exit_code = EXIT_ERROR
        signals.job_failed.send(sender=Job, job=job, exception=exc)
        if save:
            record_run(job, {"command": command, "error": exc.__class__.__name__, "message": str(exc)}, EXIT_ERROR)
        raise

    if isinstance(spec, JobSpec):
        report["job"] = spec.as_dict()
    job.report, job.exit_code = report, report["exit_code"]
    if out:
        reports.write(report, out)
    if save:
        record_run(job, report, job.exit_code)
    logger.info("%r finished with exit code %d", job, job.exit_code)
    signals.job_finished.send(sender=Job, job=job, report=report)
    return report
