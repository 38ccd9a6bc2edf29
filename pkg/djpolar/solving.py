# -*- coding: utf-8 -*-
"""
.. module:: djpolar.solving
   :synopsis: dj-polar - certified real solving of bivariate systems

Real common zeros of affine polynomial systems are found by projection:

1) resultants eliminate X2 and X1 in turn, giving two univariate
   projections whose real roots contain every coordinate of a solution
2) sympy isolates the roots of each projection in disjoint rational
   intervals
3) the grid of candidate boxes is filtered by exact interval evaluation of
   every equation while the intervals are refined

A survivor is certified ``simple-root`` when it is the only survivor over a
simple root of a projection whose eliminated leading coefficients do not
both vanish; otherwise it is certified ``refined`` (it survived refinement
down to ``DJPOLAR_SOLVE_PRECISION`` bits).
"""
from __future__ import unicode_literals

from fractions import Fraction
import logging

import sympy
from sympy.polys.polyerrors import BasePolynomialError

from . import settings as djpolar_settings
from .exceptions import (CommonComponentError, IncompatibleVariables, NotSquarefree, SolverError,
                         ZeroPolynomialError)
from .polynomials import AFFINE, GENS, Interval, Polynomial, resultant
from .utils import CERTIFICATE_REFINED, CERTIFICATE_SIMPLE_ROOT, shear_sequence, sympy_rational, to_fraction

logger = logging.getLogger(__name__)

SHEAR_ATTEMPTS = 3
EXCLUDED_SINGULAR = "singular"
INITIAL_PRECISION = 4


class IsolatingInterval(object):
    """
    One real root of a square-free univariate polynomial, enclosed in a
    closed rational interval containing no other root of ``poly``.
    """

    def __init__(self, interval, poly, multiplicity=1):
        self.interval = interval
        self.poly = poly
        self.multiplicity = multiplicity

    @property
    def sign_change(self):
        if self.interval.lo == self.interval.hi:
            return "exact"
        lo = self.poly.eval(sympy_rational(self.interval.lo))
        return "-/+" if lo < 0 else "+/-"

    def refine(self, width):
        if self.interval.width <= width:
            return self
        lo, hi, eps = sympy_rational(self.interval.lo), sympy_rational(self.interval.hi), sympy_rational(width)
        try:
            lo, hi = self.poly.refine_root(lo, hi, eps=eps)
        except BasePolynomialError as exc:
            logger.debug("root refinement of %s failed (%s), bisecting", self.interval, exc)
            lo, hi = self._bisect(lo, hi, eps)
        return IsolatingInterval(Interval(to_fraction(lo), to_fraction(hi)), self.poly, self.multiplicity)

    def _bisect(self, lo, hi, width):
        f_lo, f_hi = self.poly.eval(lo), self.poly.eval(hi)
        if f_lo * f_hi >= 0:
            raise SolverError("No sign change of {0} on [{1}, {2}]".format(self.poly.as_expr(), lo, hi))
        while hi - lo > width:
            middle = (lo + hi) / 2
            f_middle = self.poly.eval(middle)
            if f_middle == 0:
                return middle, middle
            if (f_middle < 0) == (f_lo < 0):
                lo, f_lo = middle, f_middle
            else:
                hi = middle
        return lo, hi

    def algebraic(self):
        """
        The root as an exact sympy number when its minimal polynomial over Q
        has degree at most 2, else None.
        """
        lo, hi = self.interval.lo, self.interval.hi
        if lo == hi:
            return sympy_rational(lo)
        for factor, _ in self.poly.factor_list()[1]:
            if factor.count_roots(sympy_rational(lo), sympy_rational(hi)) == 0:
                continue
            if factor.degree() > 2:
                return None
            for root in sympy.roots(factor, multiple=True):
                if root.is_real and bool(root >= sympy_rational(lo)) and bool(root <= sympy_rational(hi)):
                    return root
        return None

    def __repr__(self):
        return "IsolatingInterval({0!r}, multiplicity={1})".format(self.interval, self.multiplicity)


class CertifiedPoint(object):
    """
    A real solution of ``system`` enclosed in a rational box.

    ``x_target`` and ``y_target`` isolate the coordinates in the solved
    frame. When the system was solved after the shear X1 <- X1 + shear * X2
    the box is mapped back with x = x' + shear * y.
    """

    def __init__(self, x_target, y_target, system, multiplicity_hint=1,
                 certificate=CERTIFICATE_REFINED, shear=Fraction(0)):
        self.x_target = x_target
        self.y_target = y_target
        self.system = tuple(system)
        self.multiplicity_hint = multiplicity_hint
        self.certificate = certificate
        self.shear = to_fraction(shear)

    @property
    def box(self):
        x, y = self.x_target.interval, self.y_target.interval
        if self.shear:
            x = x + y * self.shear
        return x, y

    @property
    def width(self):
        x, y = self.box
        return max(x.width, y.width)

    @property
    def approx(self):
        return tuple(float(side.midpoint) for side in self.box)

    def contains(self, x, y):
        bx, by = self.box
        return bx.contains(x) and by.contains(y)

    def intersects(self, box):
        bx, by = self.box
        return bx.intersects(box[0]) and by.intersects(box[1])

    def refine(self, width):
        width = to_fraction(width)
        if width <= 0:
            raise ValueError("Refinement width must be positive")
        target = width / (1 + abs(self.shear))
        return CertifiedPoint(self.x_target.refine(target), self.y_target.refine(target), self.system,
                              self.multiplicity_hint, self.certificate, self.shear)

    def algebraic_coordinates(self):
        x, y = self.x_target.algebraic(), self.y_target.algebraic()
        if x is None or y is None:
            return None
        if self.shear:
            x = sympy.radsimp(x + sympy_rational(self.shear) * y)
        return x, y

    def __repr__(self):
        x, y = self.approx
        return "CertifiedPoint(({0:.9g}, {1:.9g}), {2}, multiplicity_hint={3})".format(
            x, y, self.certificate, self.multiplicity_hint)


class SolutionSet(object):
    """Certified solutions plus the ones filtered out, each with a reason."""

    def __init__(self, points=None, excluded=None, bezout=None):
        self.points = list(points or [])
        self.excluded = list(excluded or [])
        self.bezout = bezout

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, index):
        return self.points[index]

    def exclude(self, predicate, reason):
        kept, excluded = [], list(self.excluded)
        for point in self.points:
            if predicate(point):
                excluded.append((point, reason))
            else:
                kept.append(point)
        return SolutionSet(kept, excluded, self.bezout)

    def within(self, box):
        """The points and excluded points whose boxes meet ``box``."""
        return SolutionSet([point for point in self.points if point.intersects(box)],
                           [(point, reason) for point, reason in self.excluded if point.intersects(box)],
                           self.bezout)

    @property
    def multiplicity_total(self):
        return sum(point.multiplicity_hint for point in self.points)

    def sorted(self):
        return SolutionSet(sorted(self.points, key=lambda p: (p.box[0].lo, p.box[1].lo)), self.excluded, self.bezout)

    def __repr__(self):
        return "SolutionSet({0} points, {1} excluded)".format(len(self.points), len(self.excluded))


def _check_affine(*polys):
    for p in polys:
        if p.nvars != AFFINE:
            raise IncompatibleVariables("Expected an affine polynomial in X1, X2, got {0}".format(p))


def _univariate(p):
    if p.is_zero:
        raise ZeroPolynomialError("Cannot isolate the roots of the zero polynomial")
    return p.univariate()


def squarefree(p):
    """p / gcd(p, p'): the same real roots, all simple."""
    poly = _univariate(p)
    return Polynomial.from_expr(poly.sqf_part().as_expr(), p.nvars)


def _factor_roots(factor, multiplicity, bounds):
    """
    Isolating intervals of the square-free ``factor``. Rational roots hit
    exactly are split off as linear factors so that every other interval
    is refined against a polynomial with no root on its endpoints.
    """
    gen = factor.gen
    roots = []
    while factor.degree() > 0:
        intervals = factor.intervals(sqf=True, **bounds)
        exact = [s for s, t in intervals if s == t]
        if not exact:
            return roots + [IsolatingInterval(Interval(to_fraction(s), to_fraction(t)), factor, multiplicity)
                            for s, t in intervals]
        for value in exact:
            linear = sympy.Poly(gen - value, gen, domain=sympy.QQ)
            roots.append(IsolatingInterval(Interval(to_fraction(value)), linear, multiplicity))
            factor = factor.exquo(linear)
    return roots


def _disjoint(roots):
    """Refines overlapping intervals of distinct factors until they are pairwise disjoint."""
    roots = sorted(roots, key=lambda root: (root.interval.lo, root.interval.hi))
    overlapping = True
    while overlapping:
        overlapping = False
        for k in range(len(roots) - 1):
            left, right = roots[k], roots[k + 1]
            if left.interval.intersects(right.interval):
                roots[k] = left.refine(left.interval.width / 2)
                roots[k + 1] = right.refine(right.interval.width / 2)
                overlapping = True
        roots.sort(key=lambda root: (root.interval.lo, root.interval.hi))
    return roots


def _isolate(poly, window=None):
    if poly.degree() <= 0:
        return []
    bounds = {}
    if window is not None:
        bounds = {"inf": sympy_rational(window.lo), "sup": sympy_rational(window.hi)}
    try:
        roots = []
        for factor, multiplicity in poly.sqf_list()[1]:
            roots.extend(_factor_roots(factor, multiplicity, bounds))
        return _disjoint(roots)
    except BasePolynomialError as exc:
        raise SolverError("Root isolation of {0} failed: {1}".format(poly.as_expr(), exc))


def isolate_roots(p, window=None):
    """
    One IsolatingInterval per distinct real root of the univariate ``p``,
    in increasing order, optionally restricted to ``window``.
    """
    return _isolate(_univariate(p), window)


def root_bound(p):
    """Cauchy bound: every complex root has modulus at most 1 + max |a_i / a_n|."""
    coeffs = [to_fraction(c) for c in _univariate(p).all_coeffs()]
    if len(coeffs) <= 1:
        return Fraction(0)
    lead = abs(coeffs[0])
    return 1 + max(abs(c) / lead for c in coeffs[1:])


def critical_box(f, margin=None):
    """
    Box around the real critical values of both coordinate functions on V(f),
    which encloses every compact component of the curve.
    """
    margin = djpolar_settings.BOX_MARGIN if margin is None else to_fraction(margin)
    ranges = []
    for var, other in ((1, 2), (2, 1)):
        derivative = f.partial(other)
        values = []
        if not derivative.is_zero and f.degree_in(other) > 0:
            projection = resultant(f, derivative, other)
            if not projection.is_zero:
                values = [root.interval for root in isolate_roots(projection)]
        if values:
            ranges.append(Interval(min(v.lo for v in values) - margin, max(v.hi for v in values) + margin))
        else:
            ranges.append(Interval(-margin, margin))
    return tuple(ranges)


def _common_factor(f, g):
    common = sympy.gcd(f.to_poly(*GENS[1:]), g.to_poly(*GENS[1:]))
    return common.total_degree() > 0


def _vanishes(polys, interval, var):
    box = (interval, Interval(0)) if var == 1 else (Interval(0), interval)
    return all(p.eval_interval(box).contains_zero() for p in polys)


class _Grid(object):
    """Candidate boxes over two projections, filtered by interval evaluation."""

    def __init__(self, equations, x_poly, y_poly, window=None):
        self.equations = equations
        self.xs = _isolate(x_poly.univariate(), window[0] if window else None)
        self.ys = _isolate(y_poly.univariate(), window[1] if window else None)
        self.pairs = [(i, j) for i in range(len(self.xs)) for j in range(len(self.ys))]
        logger.debug("solving grid of %d x %d candidates", len(self.xs), len(self.ys))

    def column(self, i):
        return [pair for pair in self.pairs if pair[0] == i]

    def row(self, j):
        return [pair for pair in self.pairs if pair[1] == j]

    def refine(self, width):
        for i in set(i for i, _ in self.pairs):
            self.xs[i] = self.xs[i].refine(width)
        for j in set(j for _, j in self.pairs):
            self.ys[j] = self.ys[j].refine(width)
        self.pairs = [
            (i, j) for i, j in self.pairs
            if all(eq.eval_interval((self.xs[i].interval, self.ys[j].interval)).contains_zero()
                   for eq in self.equations)
        ]

    def run(self, certify=None):
        precision = INITIAL_PRECISION
        while self.pairs:
            self.refine(Fraction(1, 2 ** precision))
            if certify is not None and self.pairs and all(certify(i, j) for i, j in self.pairs):
                logger.debug("all %d survivors certified at 2^-%d", len(self.pairs), precision)
                break
            if precision >= djpolar_settings.SOLVE_PRECISION:
                break
            precision = min(precision * 2, djpolar_settings.SOLVE_PRECISION)
        return self


def _solve_once(f, g, window, shear):
    sf, sg = (f.shear(shear), g.shear(shear)) if shear else (f, g)
    grid = _Grid((sf, sg), resultant(sf, sg, 2), resultant(sf, sg, 1), window)
    lcs_x = (sf.leading_coefficient(2), sg.leading_coefficient(2))
    lcs_y = (sf.leading_coefficient(1), sg.leading_coefficient(1))

    def by_column(i, j):
        return (len(grid.column(i)) == 1 and grid.xs[i].multiplicity == 1
                and not _vanishes(lcs_x, grid.xs[i].interval, 1))

    def by_row(i, j):
        return (len(grid.row(j)) == 1 and grid.ys[j].multiplicity == 1
                and not _vanishes(lcs_y, grid.ys[j].interval, 2))

    grid.run(certify=lambda i, j: by_column(i, j) or by_row(i, j))

    points, ambiguous = [], False
    for i, j in grid.pairs:
        if len(grid.column(i)) == 1:
            multiplicity = grid.xs[i].multiplicity
        elif len(grid.row(j)) == 1:
            multiplicity = grid.ys[j].multiplicity
        else:
            multiplicity = 1
            ambiguous = True
        certificate = CERTIFICATE_SIMPLE_ROOT if by_column(i, j) or by_row(i, j) else CERTIFICATE_REFINED
        points.append(CertifiedPoint(grid.xs[i], grid.ys[j], (f, g), multiplicity, certificate, shear))
    return points, ambiguous


def solve_system(f, g, box=None):
    """
    All real common zeros of the affine polynomials f and g, optionally
    restricted to ``box`` (a pair of Intervals).

    Raises CommonComponentError when f and g share a curve component.
    Filtering points excluded by a definition is left to the caller.
    """
    _check_affine(f, g)
    if f.is_zero or g.is_zero:
        raise CommonComponentError("One of the equations vanishes identically")
    bezout = max([f.degree, 0]) * max([g.degree, 0])
    if f.is_constant or g.is_constant:
        return SolutionSet(bezout=bezout)
    if _common_factor(f, g):
        raise CommonComponentError("{0} and {1} share a curve component".format(f, g))

    points, ambiguous = _solve_once(f, g, box, Fraction(0))
    if ambiguous:
        for shear in shear_sequence(djpolar_settings.SHEAR_SEED, SHEAR_ATTEMPTS):
            logger.debug("ambiguous projection, retrying with shear %s", shear)
            sheared, still_ambiguous = _solve_once(f, g, None, shear)
            if box is not None:
                sheared = [p for p in sheared if p.intersects(box)]
            if not still_ambiguous and len(sheared) == len(points):
                points = sheared
                break
        else:
            logger.warning("multiplicity hints stay ambiguous for %d points after %d shears",
                           len(points), SHEAR_ATTEMPTS)

    width = djpolar_settings.report_width()
    solutions = SolutionSet([point.refine(width) for point in points], bezout=bezout).sorted()
    if solutions.multiplicity_total > bezout:
        logger.warning("%d intersections counted with multiplicity exceed the Bezout bound %d",
                       solutions.multiplicity_total, bezout)
    return solutions


def refine(point, width):
    return point.refine(width)


def singular_points(f):
    """
    Real points with f = df/dX1 = df/dX2 = 0, as CertifiedPoints of the
    system (f, df/dX1, df/dX2).
    """
    _check_affine(f)
    if f.is_zero:
        raise ZeroPolynomialError("The zero polynomial has no singular locus")
    _, factors = f.to_poly(*GENS[1:]).sqf_list()
    if any(multiplicity > 1 for _, multiplicity in factors):
        raise NotSquarefree("{0} has a repeated factor".format(f))
    if f.degree <= 1:
        return SolutionSet()

    fx, fy = f.partial(1), f.partial(2)
    projections = []
    for var in (2, 1):
        eliminated = [resultant(f, derivative, var) for derivative in (fx, fy) if not derivative.is_zero]
        eliminated = [r.as_expr() for r in eliminated if not r.is_zero]
        if not eliminated:
            return SolutionSet()
        combined = eliminated[0]
        for other in eliminated[1:]:
            combined = sympy.gcd(combined, other)
        projections.append(Polynomial.from_expr(combined, AFFINE))

    equations = tuple(p for p in (f, fx, fy) if not p.is_zero)
    grid = _Grid(equations, projections[0], projections[1]).run()
    width = djpolar_settings.report_width()
    points = [CertifiedPoint(grid.xs[i], grid.ys[j], equations).refine(width) for i, j in grid.pairs]
    logger.debug("%d singular points of a degree %d curve", len(points), f.degree)
    return SolutionSet(points).sorted()
