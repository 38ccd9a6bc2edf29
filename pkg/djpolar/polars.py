# -*- coding: utf-8 -*-
"""
.. module:: djpolar.polars
   :synopsis: dj-polar - projective points, quadrics and polar curves

Classical polars of a curve with respect to a point, polarity with respect
to a non-degenerate conic, and the reciprocal polar cut out by the 3x3
determinant with rows A, grad f and grad q.
"""
from __future__ import unicode_literals

from fractions import Fraction
from functools import reduce
import logging

import sympy

from .exceptions import DegenerateQuadric, DegeneratePolar, InvalidFlag, NotHomogeneous, PointAtInfinity
from .polynomials import HOMOGENEOUS, Polynomial, parse
from .utils import format_fraction, sympy_rational, to_fraction

logger = logging.getLogger(__name__)


class ProjectiveTriple(object):
    """
    Three rationals, not all zero, taken up to a nonzero scalar.

    Coordinates are stored as given; ``canonical`` scales the first nonzero
    coordinate to 1 and is used for equality and printing only.
    """
    __slots__ = ("coords",)

    def __init__(self, *coords):
        if len(coords) == 1:
            coords = tuple(coords[0])
        if len(coords) != 3:
            raise ValueError("{0} needs three coordinates, got {1}".format(self.__class__.__name__, len(coords)))
        coords = tuple(to_fraction(c) for c in coords)
        if not any(coords):
            raise ValueError("{0} coordinates cannot all be zero".format(self.__class__.__name__))
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("{0} is immutable".format(self.__class__.__name__))

    def __getitem__(self, index):
        return self.coords[index]

    def __iter__(self):
        return iter(self.coords)

    def canonical(self):
        pivot = next(c for c in self.coords if c)
        return tuple(c / pivot for c in self.coords)

    def __eq__(self, other):
        return type(self) is type(other) and self.canonical() == other.canonical()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((type(self).__name__, self.canonical()))

    def __str__(self):
        return "({0})".format(" : ".join(format_fraction(c) for c in self.canonical()))

    def __repr__(self):
        return "{0}{1}".format(self.__class__.__name__, self)


class ProjPoint(ProjectiveTriple):

    @classmethod
    def from_affine(cls, x, y):
        return cls(1, x, y)

    @property
    def is_at_infinity(self):
        return self.coords[0] == 0

    def affine(self):
        if self.is_at_infinity:
            raise PointAtInfinity("{0} lies on the line at infinity".format(self))
        a0, a1, a2 = self.coords
        return a1 / a0, a2 / a0


class ProjLine(ProjectiveTriple):

    @classmethod
    def at_infinity(cls):
        return cls(1, 0, 0)

    def as_polynomial(self):
        return reduce(lambda p, q: p + q, [
            Polynomial.variable(i, HOMOGENEOUS).scale(c) for i, c in enumerate(self.coords)
        ])


def incidence(point, line):
    return sum(a * b for a, b in zip(point.coords, line.coords)) == 0


class Flag2D(object):
    """A point L0 on the line at infinity L1 = V(X0)."""

    def __init__(self, point, line_at_infinity=None):
        line_at_infinity = line_at_infinity or ProjLine.at_infinity()
        if not incidence(point, line_at_infinity):
            raise InvalidFlag("{0} does not lie on {1}".format(point, line_at_infinity))
        self.point = point
        self.line_at_infinity = line_at_infinity

    @classmethod
    def from_direction(cls, a, b):
        return cls(ProjPoint(0, a, b))

    @property
    def direction(self):
        return self.point.coords[1], self.point.coords[2]

    def __repr__(self):
        return "Flag2D({0} in {1})".format(self.point, self.line_at_infinity)


class Quadric(object):
    """
    A non-degenerate conic V(q) with q = X^T * sym * X.
    """

    def __init__(self, q):
        if q.nvars != HOMOGENEOUS or q.is_zero or not q.is_homogeneous or q.degree != 2:
            raise NotHomogeneous("A quadric needs a homogeneous quadratic form in X0, X1, X2, got {0}".format(q))
        self.q = q
        sym = [[Fraction(0)] * 3 for _ in range(3)]
        for monomial, c in q.terms.items():
            indices = [i for i, e in enumerate(monomial) for _ in range(e)]
            i, j = indices
            if i == j:
                sym[i][i] = c
            else:
                sym[i][j] = sym[j][i] = c / 2
        self.sym = tuple(tuple(row) for row in sym)
        self.matrix = sympy.Matrix(3, 3, [sympy_rational(c) for row in sym for c in row])
        if self.matrix.det() == 0:
            raise DegenerateQuadric("{0} is a degenerate quadric".format(q))

    @classmethod
    def standard(cls):
        return cls(Polynomial.from_terms({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1}, HOMOGENEOUS))

    @classmethod
    def from_text(cls, text):
        if text.strip() == "standard":
            return cls.standard()
        return cls(parse(text, nvars=HOMOGENEOUS))

    @property
    def is_distance_like(self):
        """True when the restriction to the affine plane is positive definite."""
        b11, b12, b22 = self.sym[1][1], self.sym[1][2], self.sym[2][2]
        return b11 > 0 and b11 * b22 - b12 * b12 > 0

    def affine(self):
        return self.q.dehomogenize()

    def center(self):
        """The polar point of the line at infinity, L^perp."""
        return polar_point(self, ProjLine.at_infinity())

    def squared_distance(self, x, y):
        """
        Q-distance from the affine point (x, y) to the centre, measured with
        the lower-right block of ``sym``. Takes floats or rationals.
        """
        cx, cy = [float(c) for c in self.center().affine()]
        dx, dy = x - cx, y - cy
        b11, b12, b22 = [float(c) for c in (self.sym[1][1], self.sym[1][2], self.sym[2][2])]
        return b11 * dx * dx + 2 * b12 * dx * dy + b22 * dy * dy

    def __eq__(self, other):
        return isinstance(other, Quadric) and self.q == other.q

    def __ne__(self, other):
        return not self == other

    def __str__(self):
        return str(self.q)

    def __repr__(self):
        return "Quadric('{0}')".format(self.q)


def _check_homogeneous(f):
    if f.nvars != HOMOGENEOUS or not f.is_homogeneous:
        raise NotHomogeneous("Expected a homogeneous polynomial in X0, X1, X2, got {0}".format(f))


def classical_polar(f, A):
    """
    The polar of V(f) with respect to the point A: sum of a_i * df/dX_i.

    Raises DegeneratePolar when every first partial vanishes along A, which
    happens when A is a point of full multiplicity on the curve.
    """
    _check_homogeneous(f)
    polar = Polynomial.constant(0, HOMOGENEOUS)
    for i, a in enumerate(A.coords):
        if a:
            polar = polar + f.partial(i).scale(a)
    if polar.is_zero:
        raise DegeneratePolar("The polar of {0} with respect to {1} vanishes identically".format(f, A))
    return polar


def affine_classical_polar(f, flag):
    """Classical polar of an affine curve with respect to the flag point, dehomogenized."""
    return classical_polar(f.homogenize(), flag.point).dehomogenize()


def polar_line(Q, A):
    """The line A^perp: coefficients dq/dX_i(A) = 2 * sym * A."""
    return ProjLine(*[2 * sum(Q.sym[i][j] * A.coords[j] for j in range(3)) for i in range(3)])


def polar_point(Q, L):
    """The point whose polar line is L, i.e. sym^-1 * L up to scale."""
    image = Q.matrix.adjugate() * sympy.Matrix(3, 1, [sympy_rational(c) for c in L.coords])
    return ProjPoint(*[to_fraction(c) for c in image])


def _det_row_expansion(row, second, third):
    """det of [row; second; third] expanded along the constant ``row``."""
    terms = []
    for i in range(3):
        if not row[i]:
            continue
        j, k = [index for index in range(3) if index != i]
        cofactor = second[j] * third[k] - second[k] * third[j]
        terms.append(cofactor.scale(row[i] if i != 1 else -row[i]))
    return reduce(lambda p, q: p + q, terms)


def reciprocal_polar(f, Q, A):
    """
    det(f, q, A): the 3x3 determinant with rows A, grad f and grad q.
    Homogeneous of degree deg(f) (possibly zero).
    """
    _check_homogeneous(f)
    grad_f = [f.partial(i) for i in range(3)]
    grad_q = [Q.q.partial(i) for i in range(3)]
    return _det_row_expansion(A.coords, grad_f, grad_q)


def affine_reciprocal_polar(f, Q):
    """
    Affine part of the reciprocal polar of an affine curve, taken with
    respect to the origin (1:0:0). The centre is carried by Q.
    """
    return reciprocal_polar(f.homogenize(), Q, ProjPoint(1, 0, 0)).dehomogenize()


def reciprocal_minor_matrix(f, q_aff):
    """The 2x2 matrix with rows grad f and grad q in X1, X2."""
    return (
        (f.partial(1), f.partial(2)),
        (q_aff.partial(1), q_aff.partial(2)),
    )


def reciprocal_minor(f, q_aff):
    (f1, f2), (q1, q2) = reciprocal_minor_matrix(f, q_aff)
    return f1 * q2 - f2 * q1


def quadric_for_center(A):
    """
    The conic q' = (1 + a1^2 + a2^2) X0^2 - 2 (a1 X0 X1 + a2 X0 X2) + X1^2 + X2^2
    whose polar point of V(X0) is A and whose affine part is the squared
    Euclidean distance to A plus one.
    """
    if A.is_at_infinity:
        raise PointAtInfinity("Cannot centre a quadric at {0}, a point at infinity".format(A))
    a1, a2 = A.affine()
    terms = {
        (2, 0, 0): 1 + a1 * a1 + a2 * a2,
        (1, 1, 0): -2 * a1,
        (1, 0, 1): -2 * a2,
        (0, 2, 0): 1,
        (0, 0, 2): 1,
    }
    quadric = Quadric(Polynomial.from_terms(terms, HOMOGENEOUS))
    logger.debug("quadric centred at %s: %s", A, quadric)
    return quadric


def bezout_bound(f, g):
    return max([f.degree, 0]) * max([g.degree, 0])
