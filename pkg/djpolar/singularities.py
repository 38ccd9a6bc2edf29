# -*- coding: utf-8 -*-
"""
.. module:: djpolar.singularities
   :synopsis: dj-polar - tangent cones and the classification of singular points

A singular point is classified from the tangent cone of the curve there
(the lowest-degree homogeneous part of f translated to the point). Points
with coordinates in a real quadratic field Q(sqrt(m)) are expanded exactly
in that field; anything else is reported as Unclassified.
"""
from __future__ import unicode_literals

from fractions import Fraction
import logging
import math

import sympy

from .exceptions import NotRational, NotSingular, SingularPoint
from .polynomials import X1, X2
from .solving import CertifiedPoint
from .utils import sympy_rational, to_fraction

logger = logging.getLogger(__name__)

U, V = sympy.symbols("u v")

ORDINARY = "OrdinaryRealMultiple"
CUSP = "Cusp"
NON_ORDINARY = "NonOrdinary"
UNCLASSIFIED = "Unclassified"

BRANCH_RADIUS = Fraction(1, 2 ** 6)
BRANCH_ATTEMPTS = 12


class SingularityKind(object):

    def __init__(self, name, branches=None):
        self.name = name
        self.branches = branches

    @property
    def is_ordinary(self):
        return self.name == ORDINARY

    def __eq__(self, other):
        if isinstance(other, str):
            return self.name == other or str(self) == other
        return isinstance(other, SingularityKind) and (self.name, self.branches) == (other.name, other.branches)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.name, self.branches))

    def __str__(self):
        if self.name == ORDINARY:
            return "{0}({1})".format(self.name, self.branches)
        return self.name

    __repr__ = __str__


class Direction(object):
    """
    A projective pair (a : b) with exact real entries, the normal of the
    line V(a * X1 + b * X2).
    """

    def __init__(self, a, b):
        a, b = sympy.sympify(a), sympy.sympify(b)
        if a == 0 and b == 0:
            raise ValueError("A direction needs a nonzero coordinate")
        self.a, self.b = a, b

    def normalized(self):
        """(1 : b/a), or (0 : 1) for the vertical normal."""
        if self.a == 0:
            return sympy.Integer(0), sympy.Integer(1)
        return sympy.Integer(1), sympy.radsimp(self.b / self.a)

    def canonical(self):
        """Integral representative: (3 : -sqrt(3)) rather than (1 : -sqrt(3)/3)."""
        a, b = self.normalized()
        if a == 0:
            return a, b
        numerator, denominator = sympy.fraction(sympy.together(b))
        if denominator.is_negative:
            numerator, denominator = -numerator, -denominator
        return denominator, sympy.expand(numerator)

    def angle(self):
        """Angle of the normal in degrees, taken modulo 180, in [0, 180)."""
        return math.degrees(math.atan2(float(self.b), float(self.a))) % 180.0

    def __eq__(self, other):
        if isinstance(other, tuple):
            other = Direction(*other)
        if not isinstance(other, Direction):
            return False
        return sympy.simplify(self.a * other.b - self.b * other.a) == 0

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(str(self))

    def __str__(self):
        a, b = self.canonical()
        return "({0} : {1})".format(sympy.sstr(a), sympy.sstr(b))

    __repr__ = __str__


class TangentCone(object):
    """
    The lowest homogeneous part of f(P + (u, v)).

    ``extension`` is sqrt(m) when the point has irrational coordinates in
    Q(sqrt(m)), otherwise None.
    """

    def __init__(self, form, multiplicity, point, extension=None):
        self.form = form
        self.multiplicity = multiplicity
        self.point = point
        self.extension = extension
        self._factors = None
        self._squarefree = None

    def factor(self):
        """
        Returns (directions, complex_pairs, in_scope) where ``directions``
        lists (Direction, multiplicity) for every real linear factor.
        """
        if self._factors is not None:
            return self._factors
        if self.extension is not None:
            _, factors = sympy.factor_list(self.form, U, V, extension=self.extension)
        else:
            _, factors = sympy.factor_list(self.form, U, V)

        directions, complex_pairs, in_scope = [], 0, True
        squarefree = all(multiplicity == 1 for factor, multiplicity in factors
                         if sympy.Poly(factor, U, V).total_degree() > 0)
        for factor, multiplicity in factors:
            poly = sympy.Poly(factor, U, V)
            degree = poly.total_degree()
            if degree == 0:
                continue
            if degree == 1:
                directions.append((Direction(poly.coeff_monomial(U), poly.coeff_monomial(V)), multiplicity))
            elif degree == 2:
                a, b, c = poly.coeff_monomial(U ** 2), poly.coeff_monomial(U * V), poly.coeff_monomial(V ** 2)
                discriminant = sympy.radsimp(b * b - 4 * a * c)
                if discriminant.is_negative:
                    complex_pairs += multiplicity
                elif a != 0:
                    for sign in (1, -1):
                        root = sympy.radsimp((-b + sign * sympy.sqrt(discriminant)) / (2 * a))
                        directions.append((Direction(1, -root), multiplicity))
                else:
                    directions.append((Direction(0, 1), multiplicity))
                    directions.append((Direction(b, c), multiplicity))
            else:
                in_scope = False
        self._squarefree = squarefree
        self._factors = (directions, complex_pairs, in_scope)
        return self._factors

    @property
    def directions(self):
        return self.factor()[0]

    @property
    def complex_pairs(self):
        return self.factor()[1]

    @property
    def is_squarefree(self):
        self.factor()
        return self._squarefree

    def __str__(self):
        return sympy.sstr(sympy.factor(self.form, extension=self.extension) if self.extension else
                          sympy.factor(self.form))


class SingularityReport(object):

    def __init__(self, location, kind, multiplicity=None, directions=None, complex_pairs=0,
                 coordinates=None, branches=None):
        self.location = location
        self.kind = kind
        self.multiplicity = multiplicity
        self.directions = list(directions or [])
        self.complex_pairs = complex_pairs
        self.coordinates = coordinates
        self.branches = branches

    @property
    def is_ordinary(self):
        return self.kind.is_ordinary

    def __repr__(self):
        return "SingularityReport({0} at {1})".format(self.kind, self.coordinates or self.location.approx)


def _quadratic_surd(value):
    """sqrt(m) when ``value`` lies in Q(sqrt(m)) \\ Q, None when rational."""
    if value.is_Rational:
        return None
    x = sympy.Dummy("x")
    minimal = sympy.Poly(sympy.minimal_polynomial(value, x), x)
    if minimal.degree() != 2:
        raise NotRational("{0} does not lie in a quadratic field".format(value))
    a, b, c = minimal.all_coeffs()
    _, surd = sympy.sqrt(sympy.Rational(b * b - 4 * a * c)).as_coeff_Mul()
    return surd


def exact_coordinates(point):
    """Exact (x, y) of a certified point, a rational pair or a pair of sympy surds."""
    if isinstance(point, CertifiedPoint):
        coordinates = point.algebraic_coordinates()
        if coordinates is None:
            raise NotRational("The point near {0} has coordinates outside every quadratic field".format(point.approx))
        return coordinates
    x, y = point
    return tuple(sympy_rational(c) if not isinstance(c, sympy.Basic) else c for c in (x, y))


def tangent_cone(f, point):
    """
    The lowest-degree homogeneous part of f(x + u, y + v), in the local
    variables u, v. Raises NotSingular unless f and its gradient vanish at
    the point.
    """
    x, y = exact_coordinates(point)
    surds = set(s for s in (_quadratic_surd(x), _quadratic_surd(y)) if s is not None)
    if len(surds) > 1:
        raise NotRational("({0}, {1}) needs more than one quadratic extension".format(x, y))
    extension = surds.pop() if surds else None

    local = sympy.expand(f.as_expr().subs({X1: x + U, X2: y + V}, simultaneous=True))
    poly = sympy.Poly(local, U, V, extension=True) if extension is not None else sympy.Poly(local, U, V)
    by_degree = {}
    for (i, j), coefficient in poly.terms():
        if coefficient != 0:
            by_degree.setdefault(i + j, []).append(coefficient * U ** i * V ** j)
    if not by_degree:
        raise NotSingular("The polynomial vanishes identically")
    lowest = min(by_degree)
    if lowest == 0:
        raise NotSingular("({0}, {1}) is not on the curve".format(x, y))
    if lowest == 1:
        raise NotSingular("({0}, {1}) is a nonsingular point of the curve".format(x, y))
    return TangentCone(sympy.Add(*by_degree[lowest]), lowest, (x, y), extension)


def _odd_roots_on_segment(p, lo, hi):
    """Real roots of odd multiplicity of the univariate Poly p in [lo, hi]."""
    if p.is_zero:
        return None
    _, factors = p.sqf_list()
    return sum(factor.count_roots(lo, hi) for factor, multiplicity in factors
               if multiplicity % 2 and factor.degree() > 0)


def _square_crossings(f, cx, cy, r):
    t = sympy.Symbol("t")
    expr = f.as_expr()
    corners = [(cx - r, cy - r), (cx + r, cy - r), (cx + r, cy + r), (cx - r, cy + r)]
    if any(f.eval_rat(corner) == 0 for corner in corners):
        return None
    total = 0
    for fixed, value in ((X2, cy - r), (X2, cy + r), (X1, cx - r), (X1, cx + r)):
        moving = X1 if fixed == X2 else X2
        centre = cx if moving == X1 else cy
        side = sympy.Poly(expr.subs(fixed, sympy_rational(value)).subs(moving, t), t)
        count = _odd_roots_on_segment(side, sympy_rational(centre - r), sympy_rational(centre + r))
        if count is None:
            return None
        total += count
    return total


def count_real_branches(f, point, radius=None):
    """
    Number of real branches of V(f) through a singular point, from the sign
    changes of f along a small square around it: each branch crosses the
    square twice. The radius is halved until two consecutive radii agree.
    Returns None when no stable count is found.
    """
    radius = to_fraction(radius) if radius is not None else BRANCH_RADIUS
    previous = None
    for _ in range(BRANCH_ATTEMPTS):
        if isinstance(point, CertifiedPoint):
            located = point.refine(radius / 2 ** 10)
            cx, cy = [side.midpoint for side in located.box]
        else:
            cx, cy = [to_fraction(c) for c in point]
        crossings = _square_crossings(f, cx, cy, radius)
        if crossings is None:
            radius = radius * 3 / 4
            continue
        if crossings == previous:
            logger.debug("%d crossings stable at radius %s", crossings, radius)
            return crossings // 2
        previous = crossings
        radius = radius / 2
    logger.warning("branch count near %s did not stabilise", point)
    return None


def classify(f, point):
    """
    SingularityReport for a certified singular point of f.

    OrdinaryRealMultiple(k): squarefree tangent cone with k >= 2 real lines.
    Cusp: double point whose cone is a real line squared, with one real branch.
    NonOrdinary: any other repeated tangent. Isolated real points (acnodes)
    land here too, with branches = 0: a cone without real lines, or a real
    line squared that no real branch passes through.
    Unclassified: coordinates outside a quadratic field, or a cone factor of
    degree three or more.
    """
    try:
        coordinates = exact_coordinates(point)
        cone = tangent_cone(f, coordinates)
    except NotRational as exc:
        logger.warning("singular point left unclassified: %s", exc)
        return SingularityReport(point, SingularityKind(UNCLASSIFIED))

    directions, complex_pairs, in_scope = cone.factor()
    report = dict(multiplicity=cone.multiplicity, directions=directions, complex_pairs=complex_pairs,
                  coordinates=coordinates)
    if not in_scope:
        logger.warning("tangent cone %s at %s is beyond quadratic factors", cone, coordinates)
        return SingularityReport(point, SingularityKind(UNCLASSIFIED), **report)

    real_lines = len(directions)
    if cone.is_squarefree and real_lines >= 2:
        return SingularityReport(point, SingularityKind(ORDINARY, real_lines), branches=real_lines, **report)

    if cone.multiplicity == 2 and len(directions) == 1 and directions[0][1] == 2:
        branches = count_real_branches(f, point)
        if branches is None:
            return SingularityReport(point, SingularityKind(UNCLASSIFIED), **report)
        kind = SingularityKind(CUSP) if branches == 1 else SingularityKind(NON_ORDINARY)
        return SingularityReport(point, kind, branches=branches, **report)

    return SingularityReport(point, SingularityKind(NON_ORDINARY), branches=0 if real_lines == 0 else None, **report)


def gauss_direction(f, point):
    """The Gauss map at a nonsingular point: (df/dX1 : df/dX2)."""
    exact = [c if isinstance(c, sympy.Basic) else sympy_rational(c) for c in point]
    gradient = [
        sympy.radsimp(sympy.expand(f.partial(var).as_expr().subs({X1: exact[0], X2: exact[1]}, simultaneous=True)))
        for var in (1, 2)
    ]
    if all(g == 0 for g in gradient):
        raise SingularPoint("The gradient vanishes at {0}".format(tuple(point)))
    return Direction(*gradient)


def gradient_interval(f, box):
    """Interval enclosures of df/dX1 and df/dX2 over a box."""
    return tuple(f.partial(var).eval_interval(box) for var in (1, 2))


def is_nonsingular_box(f, box):
    """True when the gradient is certified nonzero on the whole box."""
    return any(not g.contains_zero() for g in gradient_interval(f, box))