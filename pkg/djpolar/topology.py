# -*- coding: utf-8 -*-
"""
.. module:: djpolar.topology
   :synopsis: dj-polar - connected components and polar coverage

The real curve inside a box is covered by grid cells that may carry a curve
point. Candidates come from a quadtree descending ``SUBCELL_LEVELS`` below
the requested resolution: a cell is discarded as soon as an exact range
bound of f, a Taylor expansion around the cell centre, excludes zero. A
grid cell is kept when one of its subcells survives. Kept cells are grouped
by edge adjacency, and a group counts as a component only when it holds a
certified curve point: a sign change or zero of f at the subcell corners
and centres, or one of the anchor boxes passed by the caller (singular
points, whose isolated real points have no sign change around them).

Component counts are certified only as stable under one refinement: an
interval cover can merge two components that come closer than a cell.
"""
from __future__ import unicode_literals

from collections import OrderedDict, deque
from math import comb
import logging
import math

import numpy as np
import sympy

from . import settings as djpolar_settings
from .exceptions import AmbiguousAssignment, NotOnCurve
from .polynomials import X1, X2, Interval
from .singularities import Direction, is_nonsingular_box
from .solving import EXCLUDED_SINGULAR, SolutionSet, critical_box
from .utils import VERDICT_COVERED, VERDICT_ONLY_SINGULAR, VERDICT_UNCOVERED, sympy_rational, to_fraction

logger = logging.getLogger(__name__)

TAG_NONSINGULAR = "nonsingular"
TAG_SINGULAR = "singular"

SUBCELL_LEVELS = 2
SECTOR_GAP = 12.0
NEWTON_STEPS = 8


class _CellTest(object):
    """
    Exact range test for f on the cells of a ``cells`` x ``cells`` grid.

    f is rewritten on the integer lattice of half cells, P(i, j) =
    c * f(x_min + i * hx / 2, y_min + j * hy / 2) with integer coefficients,
    so that the cell (i0, j0) of side s has centre (2 * i0 + s, 2 * j0 + s)
    and half side s. Around the centre P(ci + s * u, cj + s * v) has Taylor
    coefficients s^(a + b) * D_ab(ci, cj) with u, v in [-1, 1]: monomials
    with both exponents even range over [0, 1], all others over [-1, 1].
    """

    def __init__(self, f, box, cells):
        i, j = sympy.symbols("i j")
        (x, y) = box
        hx, hy = x.width / (2 * cells), y.width / (2 * cells)
        local = f.as_expr().subs({X1: sympy_rational(x.lo) + sympy_rational(hx) * i,
                                  X2: sympy_rational(y.lo) + sympy_rational(hy) * j}, simultaneous=True)
        _, lattice = sympy.Poly(sympy.expand(local), i, j, domain="QQ").clear_denoms(convert=True)
        self.terms = dict((monomial, int(c)) for monomial, c in lattice.terms() if c)
        self.degree = max([p + q for p, q in self.terms] or [0])
        self._values = {}

        derivatives = []
        for a in range(self.degree + 1):
            for b in range(self.degree + 1 - a):
                shifted = [
                    (p - a, q - b, c * comb(p, a) * comb(q, b))
                    for (p, q), c in self.terms.items() if p >= a and q >= b
                ]
                if shifted:
                    derivatives.append((a + b, a % 2 == 0 and b % 2 == 0, shifted))
        self.derivatives = sorted(derivatives, key=lambda d: d[0])

    def _powers(self, value):
        powers = [1]
        for _ in range(self.degree):
            powers.append(powers[-1] * value)
        return powers

    def may_vanish(self, i0, j0, size):
        powers_i = self._powers(2 * i0 + size)
        powers_j = self._powers(2 * j0 + size)

        lo = hi = None
        for order, one_sided, shifted in self.derivatives:
            value = sum(c * powers_i[p] * powers_j[q] for p, q, c in shifted) * size ** order
            if lo is None:
                lo = hi = value
            elif one_sided:
                if value < 0:
                    lo += value
                else:
                    hi += value
            else:
                lo -= abs(value)
                hi += abs(value)
            if lo <= 0 <= hi:
                return True
        return lo is not None and lo <= 0 <= hi

    def value(self, i, j):
        """Exact lattice value P(i, j), memoized."""
        if (i, j) not in self._values:
            powers_i, powers_j = self._powers(i), self._powers(j)
            self._values[(i, j)] = sum(c * powers_i[p] * powers_j[q] for (p, q), c in self.terms.items())
        return self._values[(i, j)]

    def changes_sign(self, subcells):
        """True when P vanishes or takes both signs on the corners and centres of ``subcells``."""
        signs = set()
        for fi, fj in subcells:
            for i, j in ((0, 0), (2, 0), (0, 2), (2, 2), (1, 1)):
                value = self.value(2 * fi + i, 2 * fj + j)
                if value == 0:
                    return True
                signs.add(value > 0)
                if len(signs) == 2:
                    return True
        return False


def _label(cells):
    """Edge-connected groups of ``cells``."""
    remaining = set(cells)
    groups = []
    for start in sorted(cells):
        if start not in remaining:
            continue
        remaining.discard(start)
        group, queue = [start], deque([start])
        while queue:
            ci, cj = queue.popleft()
            for neighbour in ((ci + 1, cj), (ci - 1, cj), (ci, cj + 1), (ci, cj - 1)):
                if neighbour in remaining:
                    remaining.discard(neighbour)
                    group.append(neighbour)
                    queue.append(neighbour)
        groups.append(frozenset(group))
    return groups


class ComponentMap(object):
    """
    Curve-carrying cells of a ``resolution`` x ``resolution`` grid over
    ``box`` and their partition into edge-connected components.

    ``discarded`` holds the groups of candidate cells without a certified
    curve point; they take no part in assignment.
    """

    def __init__(self, f, box, resolution, components, discarded=()):
        self.f = f
        self.box = box
        self.resolution = resolution
        self.components = list(components)
        self.discarded = list(discarded)
        self.cells = frozenset(cell for group in self.components for cell in group)
        last = resolution - 1
        self.compact = [
            not any(ci in (0, last) or cj in (0, last) for ci, cj in group)
            for group in self.components
        ]
        self._owner = dict((cell, index) for index, group in enumerate(self.components) for cell in group)

    @property
    def step(self):
        x, y = self.box
        return x.width / self.resolution, y.width / self.resolution

    def cell_box(self, cell):
        (x, y), (hx, hy) = self.box, self.step
        ci, cj = cell
        return Interval(x.lo + ci * hx, x.lo + (ci + 1) * hx), Interval(y.lo + cj * hy, y.lo + (cj + 1) * hy)

    def cell_center(self, cell):
        return tuple(float(side.midpoint) for side in self.cell_box(cell))

    def component_of(self, cell):
        return self._owner.get(cell)

    def carrying_area(self):
        hx, hy = self.step
        return len(self.cells) * hx * hy

    def _index_range(self, side, origin, step):
        first = int(math.ceil((side.lo - origin) / step)) - 1
        last = int(math.floor((side.hi - origin) / step))
        return range(max(first, 0), min(last, self.resolution - 1) + 1)

    def cells_meeting(self, box, cells=None):
        cells = self.cells if cells is None else cells
        (x, y), (hx, hy) = self.box, self.step
        if not (box[0].intersects(x) and box[1].intersects(y)):
            return []
        return [
            (ci, cj)
            for ci in self._index_range(box[0], x.lo, hx)
            for cj in self._index_range(box[1], y.lo, hy)
            if (ci, cj) in cells
        ]

    def __len__(self):
        return len(self.components)

    def __repr__(self):
        return "ComponentMap({0} components, {1} cells at resolution {2})".format(
            len(self.components), len(self.cells), self.resolution)


def _as_box(box):
    return tuple(Interval.coerce(side) for side in box)


def component_map(f, box, resolution=None, anchors=()):
    """
    Interval-certified cover of V(f) inside ``box`` by the cells of a
    ``resolution`` x ``resolution`` grid, partitioned into components.

    ``anchors`` are boxes known to hold curve points; a group of cells
    meeting one of them is kept even without a sign change of f.
    """
    resolution = djpolar_settings.validate_resolution(resolution or djpolar_settings.DEFAULT_RESOLUTION)
    box = _as_box(box)
    fine = resolution << SUBCELL_LEVELS
    test = _CellTest(f, box, fine)

    size = fine
    level = [(0, 0)]
    while True:
        level = [cell for cell in level if test.may_vanish(cell[0], cell[1], size)]
        logger.debug("subdivision at cell size %d keeps %d cells", size, len(level))
        if size == 1:
            break
        half = size // 2
        level = [
            (ci + di, cj + dj)
            for ci, cj in level
            for di in (0, half)
            for dj in (0, half)
        ]
        size = half

    subcells = {}
    for fi, fj in level:
        subcells.setdefault((fi >> SUBCELL_LEVELS, fj >> SUBCELL_LEVELS), []).append((fi, fj))

    cmap = ComponentMap(f, box, resolution, [])
    anchors = [_as_box(anchor) for anchor in anchors]
    components, discarded = [], []
    for group in _label(subcells):
        if any(test.changes_sign(subcells[cell]) for cell in group) or \
                any(cmap.cells_meeting(anchor, group) for anchor in anchors):
            components.append(group)
        else:
            discarded.append(group)
    if discarded:
        logger.debug("%d cell groups without a certified curve point discarded", len(discarded))
    return ComponentMap(f, box, resolution, components, discarded)


def compare_resolutions(f, box, resolution=None, anchors=()):
    """Component maps at ``resolution`` and at twice that resolution."""
    resolution = djpolar_settings.validate_resolution(resolution or djpolar_settings.DEFAULT_RESOLUTION)
    coarse = component_map(f, box, resolution, anchors)
    finer = component_map(f, box, 2 * resolution, anchors)
    if len(finer) != len(coarse):
        logger.warning("component count changes from %d to %d under refinement", len(coarse), len(finer))
    return coarse, finer


def assign(point, cmap):
    """
    The component whose carrying cells meet the point's box. The point is
    refined below the cell size first and then down to
    ``DJPOLAR_AMBIGUITY_PRECISION`` bits while the answer is ambiguous.
    """
    hx, hy = cmap.step
    width = min(hx, hy) / 2
    floor = djpolar_settings.ambiguity_width()
    while True:
        point = point.refine(width)
        owners = sorted(set(cmap.component_of(cell) for cell in cmap.cells_meeting(point.box)))
        if not owners:
            raise NotOnCurve("No curve-carrying cell meets the point near {0}".format(point.approx))
        if len(owners) == 1:
            return owners[0]
        if width <= floor:
            raise AmbiguousAssignment("The point near {0} touches components {1}".format(point.approx, owners))
        width = max(width / 2 ** 4, floor)


class WitnessRecord(object):

    def __init__(self, point, tag, distance=None):
        self.point = point
        self.tag = tag
        self.distance = distance

    @property
    def is_nonsingular(self):
        return self.tag == TAG_NONSINGULAR


class ComponentCoverage(object):

    def __init__(self, index, compact, cells):
        self.index = index
        self.compact = compact
        self.cells = cells
        self.witnesses = []
        self.singularities = []
        self.extremal = None
        self.nearest = None

    @property
    def verdict(self):
        if any(w.is_nonsingular for w in self.witnesses):
            return VERDICT_COVERED
        if self.witnesses:
            return VERDICT_ONLY_SINGULAR
        return VERDICT_UNCOVERED


class CoverageReport(object):

    def __init__(self, components, checklist, unassigned=None):
        self.components = components
        self.checklist = checklist
        self.unassigned = list(unassigned or [])

    @property
    def verdicts(self):
        return [component.verdict for component in self.components]

    @property
    def all_covered(self):
        return all(verdict == VERDICT_COVERED for verdict in self.verdicts)

    @property
    def hypotheses_met(self):
        return all(value for key, value in self.checklist.items()
                   if value is not None and key != "at_most_one_non_ordinary_per_component")


def witness_tag(f, point, singular_boxes):
    box = point.box
    for sx, sy in singular_boxes:
        if box[0].intersects(sx) and box[1].intersects(sy):
            return TAG_SINGULAR
    if is_nonsingular_box(f, box):
        return TAG_NONSINGULAR
    return TAG_SINGULAR


def exclude_singular(f, solutions, singulars):
    """
    The solutions refined to the report width, with every point that is not
    a certified nonsingular point of V(f) moved to ``excluded``.
    """
    report_width = djpolar_settings.report_width()
    singular_boxes = [report.location.refine(report_width).box for report in singulars]
    refined = SolutionSet([point.refine(report_width) for point in solutions], solutions.excluded,
                          solutions.bezout)
    return refined.exclude(lambda point: witness_tag(f, point, singular_boxes) == TAG_SINGULAR,
                           EXCLUDED_SINGULAR)


def verify_coverage(f, witnesses, singulars, cmap, flag=None, quadric=None):
    """
    Per-component verdicts for the witnesses of a polar variety, given as a
    SolutionSet. Points excluded as singular count as singular witnesses.

    A component is Covered when one of its witnesses is a certified
    nonsingular point of the curve. The checklist records the hypotheses
    under which every component should be covered.
    """
    report_width = djpolar_settings.report_width()
    singular_boxes = [report.location.refine(report_width).box for report in singulars]
    coverage = [
        ComponentCoverage(index, cmap.compact[index], len(group))
        for index, group in enumerate(cmap.components)
    ]
    unassigned = []

    tagged = [(point, None) for point in witnesses]
    tagged += [(point, TAG_SINGULAR) for point, reason in witnesses.excluded if reason == EXCLUDED_SINGULAR]
    for point, tag in tagged:
        point = point.refine(report_width)
        tag = tag or witness_tag(f, point, singular_boxes)
        distance = quadric.squared_distance(*point.approx) if quadric is not None else None
        try:
            index = assign(point, cmap)
        except (NotOnCurve, AmbiguousAssignment) as exc:
            logger.warning("witness left unassigned: %s", exc)
            unassigned.append((point, str(exc)))
            continue
        coverage[index].witnesses.append(WitnessRecord(point, tag, distance))

    for report in singulars:
        try:
            coverage[assign(report.location, cmap)].singularities.append(report)
        except (NotOnCurve, AmbiguousAssignment) as exc:
            logger.warning("singular point left unassigned: %s", exc)

    for component in coverage:
        if not component.witnesses:
            continue
        if flag is not None:
            a, b = [float(c) for c in flag.direction]
            ordered = sorted(component.witnesses, key=lambda w: b * w.point.approx[0] - a * w.point.approx[1])
            component.extremal = (ordered[0], ordered[-1])
        if quadric is not None:
            component.nearest = min(component.witnesses, key=lambda w: w.distance)

    checklist = OrderedDict([
        ("compact", all(cmap.compact)),
        ("ordinary_singularities", all(report.is_ordinary for report in singulars)),
        ("at_most_one_non_ordinary_per_component",
         all(sum(1 for r in c.singularities if not r.is_ordinary) <= 1 for c in coverage)),
        ("center_off_curve", None),
        ("distance_like", None),
    ])
    if quadric is not None:
        center = quadric.center()
        checklist["center_off_curve"] = center.is_at_infinity or f.eval_rat(center.affine()) != 0
        checklist["distance_like"] = quadric.is_distance_like

    return CoverageReport(coverage, checklist, unassigned)


class Sector(object):
    """
    An arc of normal directions on the projective circle: angles from
    ``start`` through ``start + extent`` degrees, taken modulo 180.
    """

    def __init__(self, start, extent):
        self.start = start % 180.0
        self.extent = min(extent, 180.0)

    @property
    def is_full(self):
        return self.extent >= 180.0

    @property
    def end(self):
        return self.start + self.extent

    def contains(self, angle):
        return self.is_full or (angle - self.start) % 180.0 <= self.extent

    def __repr__(self):
        return "Sector({0:.2f}, {1:.2f})".format(self.start, self.end)


def _merge_angles(angles, gap):
    if not len(angles):
        return []
    angles = np.sort(np.mod(angles, 180.0))
    spacing = np.diff(np.concatenate([angles, [angles[0] + 180.0]]))
    breaks = np.nonzero(spacing > gap)[0]
    if not len(breaks):
        return [Sector(0.0, 180.0)]
    sectors = []
    for k, index in enumerate(breaks):
        start = angles[(index + 1) % len(angles)]
        following = breaks[(k + 1) % len(breaks)]
        end = angles[following]
        sectors.append(Sector(float(start), float((end - start) % 180.0)))
    return sorted(sectors, key=lambda s: s.start)


def gauss_sector_scan(f, cmap, component, samples=None):
    """
    Sampled Gauss image of one component: arcs of normal directions
    (df/dX1 : df/dX2) on the projective circle.

    Cell centres are pulled onto the curve with a few Newton steps in
    floating point; samples that stay near a vanishing gradient or drift
    away from their cell are dropped. The arcs are not certified.
    """
    samples = samples or djpolar_settings.GAUSS_SAMPLES
    cells = sorted(cmap.components[component])
    stride = max(1, len(cells) // samples)
    centres = np.array([cmap.cell_center(cell) for cell in cells[::stride]], dtype=float)
    if not len(centres):
        return []

    value, fx, fy = f.numeric(), f.partial(1).numeric(), f.partial(2).numeric()
    x, y = centres[:, 0].copy(), centres[:, 1].copy()
    for _ in range(NEWTON_STEPS):
        gx, gy = np.broadcast_to(fx(x, y), x.shape), np.broadcast_to(fy(x, y), x.shape)
        norm = gx * gx + gy * gy
        safe = norm > 0
        step = np.where(safe, np.broadcast_to(value(x, y), x.shape) / np.where(safe, norm, 1.0), 0.0)
        x, y = x - step * gx, y - step * gy

    hx, hy = [float(h) for h in cmap.step]
    gx, gy = np.broadcast_to(fx(x, y), x.shape), np.broadcast_to(fy(x, y), x.shape)
    scale = np.hypot(gx, gy)
    keep = (np.abs(x - centres[:, 0]) <= 2 * hx) & (np.abs(y - centres[:, 1]) <= 2 * hy) & \
        (scale > 1e-9 * max(1.0, float(np.max(scale)) if len(scale) else 1.0))
    angles = np.degrees(np.arctan2(gy[keep], gx[keep]))
    return _merge_angles(angles, SECTOR_GAP)


def polar_direction_hits(sectors, a, b):
    """
    Components whose Gauss image contains the normal direction of the
    flag point (0 : a : b), i.e. where a * df/dX1 + b * df/dX2 can vanish.
    ``sectors`` maps component ids to lists of Sector.
    """
    angle = Direction(-to_fraction(b), to_fraction(a)).angle()
    return sorted(component for component, arcs in sectors.items() if any(s.contains(angle) for s in arcs))


def default_box(f, extra_points=()):
    """The critical box of f, widened to hold ``extra_points`` with the usual margin."""
    box = critical_box(f)
    margin = djpolar_settings.BOX_MARGIN
    for point in extra_points:
        px, py = point.box
        box = (box[0].hull(px.inflate(margin)), box[1].hull(py.inflate(margin)))
    return box


def fraction_box(values):
    """Parses (x0, x1, y0, y1) into a box of Intervals."""
    x0, x1, y0, y1 = [to_fraction(v) for v in values]
    return Interval(x0, x1), Interval(y0, y1)

