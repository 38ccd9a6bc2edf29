# -*- coding: utf-8 -*-
"""
.. module:: djpolar.polynomials
   :synopsis: dj-polar - exact polynomials in X0, X1, X2 over the rationals

Everything else in dj-polar is built on this module:

1) ``Polynomial``, an immutable wrapper around a sympy ``Poly`` over QQ in the
   generators X0, X1, X2, either affine (X1, X2 only) or homogeneous
2) ``Interval``, closed intervals with exact rational endpoints used for
   certified evaluation
3) ``parse``, the text grammar shared by the command line and the corpus
4) ``resultant``, exact resultants with the denominators cleared first
"""
from __future__ import unicode_literals

from fractions import Fraction
import logging

import pyparsing as pp
import sympy
from sympy import Poly, QQ, ZZ
from sympy.polys import polyconfig

from . import settings as djpolar_settings
from .exceptions import (IncompatibleVariables, NegativeExponent, NotHomogeneous,
                         PolynomialSyntaxError, UnknownIdentifier, ZeroPolynomialError)
from .utils import format_fraction, to_fraction

logger = logging.getLogger(__name__)

X0, X1, X2 = sympy.symbols("X0 X1 X2")
GENS = (X0, X1, X2)
NAMES = ("X0", "X1", "X2")

AFFINE = 2
HOMOGENEOUS = 3

VARIABLE_ALIASES = {
    "X0": 0,
    "X1": 1,
    "X2": 2,
    "x": 1,
    "y": 2,
}


class Interval(object):
    """
    A closed interval [lo, hi] with Fraction endpoints.

    Arithmetic is exact, so every operation returns the tightest enclosure
    of the set it represents (up to the usual dependency effect of interval
    arithmetic).
    """
    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = to_fraction(lo)
        hi = lo if hi is None else to_fraction(hi)
        if lo > hi:
            raise ValueError("Interval lower end {0} exceeds upper end {1}".format(lo, hi))
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("Interval is immutable")

    @classmethod
    def coerce(cls, value):
        if isinstance(value, Interval):
            return value
        if isinstance(value, (tuple, list)):
            return cls(value[0], value[1])
        return cls(value)

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2

    def contains(self, value):
        if isinstance(value, Interval):
            return self.lo <= value.lo and value.hi <= self.hi
        value = to_fraction(value)
        return self.lo <= value <= self.hi

    def contains_zero(self):
        return self.lo <= 0 <= self.hi

    def intersects(self, other):
        return self.lo <= other.hi and other.lo <= self.hi

    def hull(self, other):
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def split(self):
        mid = self.midpoint
        return Interval(self.lo, mid), Interval(mid, self.hi)

    def inflate(self, amount):
        amount = to_fraction(amount)
        return Interval(self.lo - amount, self.hi + amount)

    def __add__(self, other):
        other = Interval.coerce(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-Interval.coerce(other))

    def __rsub__(self, other):
        return Interval.coerce(other) - self

    def __mul__(self, other):
        other = Interval.coerce(other)
        products = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("Negative interval powers are not supported")
        if exponent == 0:
            return Interval(1)
        lo, hi = self.lo ** exponent, self.hi ** exponent
        if exponent % 2:
            return Interval(lo, hi)
        if self.lo <= 0 <= self.hi:
            return Interval(0, max(lo, hi))
        return Interval(min(lo, hi), max(lo, hi))

    def __eq__(self, other):
        return isinstance(other, Interval) and self.lo == other.lo and self.hi == other.hi

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return "Interval({0}, {1})".format(format_fraction(self.lo), format_fraction(self.hi))


class Polynomial(object):
    """
    An exact polynomial over the rationals.

    ``nvars`` is 2 for affine polynomials in X1, X2 and 3 for polynomials in
    the homogeneous coordinates X0, X1, X2. Instances never change; all
    operations return new polynomials.
    """
    __slots__ = ("_poly", "nvars", "_terms", "_numeric")

    def __init__(self, poly, nvars=AFFINE):
        if nvars not in (AFFINE, HOMOGENEOUS):
            raise IncompatibleVariables("nvars must be 2 or 3, got {0}".format(nvars))
        if not isinstance(poly, Poly) or poly.gens != GENS or poly.get_domain() != QQ:
            poly = Poly(poly.as_expr() if isinstance(poly, Poly) else poly, *GENS, domain=QQ)
        if nvars == AFFINE and poly.degree(X0) > 0:
            raise IncompatibleVariables("Affine polynomials cannot contain X0: {0}".format(poly.as_expr()))
        object.__setattr__(self, "_poly", poly)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", None)
        object.__setattr__(self, "_numeric", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -----------------------------------------------------------------
    # Construction
    # -----------------------------------------------------------------
    @classmethod
    def from_terms(cls, terms, nvars=AFFINE):
        rep = dict(
            (tuple(monomial), sympy.Rational(c.numerator, c.denominator))
            for monomial, c in ((m, to_fraction(v)) for m, v in terms.items())
            if c
        )
        return cls(Poly.from_dict(rep, *GENS, domain=QQ) if rep else Poly(0, *GENS, domain=QQ), nvars)

    @classmethod
    def from_expr(cls, expr, nvars=AFFINE):
        return cls(Poly(expr, *GENS, domain=QQ), nvars)

    @classmethod
    def constant(cls, value, nvars=AFFINE):
        value = to_fraction(value)
        return cls(Poly(sympy.Rational(value.numerator, value.denominator), *GENS, domain=QQ), nvars)

    @classmethod
    def variable(cls, index, nvars=AFFINE):
        if nvars == AFFINE and index == 0:
            raise IncompatibleVariables("X0 is not an affine variable")
        return cls(Poly(GENS[index], *GENS, domain=QQ), nvars)

    # -----------------------------------------------------------------
    # Inspection
    # -----------------------------------------------------------------
    @property
    def poly(self):
        return self._poly

    @property
    def terms(self):
        """
        The sparse term map: exponent vector (e0, e1, e2) -> Fraction.
        The zero polynomial has no terms.
        """
        if self._terms is None:
            terms = dict(
                (monomial, Fraction(int(c.p), int(c.q)))
                for monomial, c in self._poly.terms()
                if c != 0
            )
            object.__setattr__(self, "_terms", terms)
        return self._terms

    @property
    def is_zero(self):
        return self._poly.is_zero

    @property
    def is_constant(self):
        return self.degree <= 0

    @property
    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if self.is_zero:
            return -1
        return int(self._poly.total_degree())

    def degree_in(self, var):
        if self.is_zero:
            return -1
        return int(self._poly.degree(GENS[var]))

    @property
    def is_homogeneous(self):
        degrees = set(sum(monomial) for monomial in self.terms)
        return len(degrees) <= 1

    @property
    def variables(self):
        """Indices of the variables that actually occur."""
        return tuple(i for i in range(3) if self.degree_in(i) > 0)

    def as_expr(self):
        return self._poly.as_expr()

    def coefficient(self, monomial):
        return self.terms.get(tuple(monomial), Fraction(0))

    def leading_coefficient(self, var):
        """Coefficient of the highest power of ``var``, a polynomial in the other variables."""
        top = self.degree_in(var)
        if top < 0:
            return self
        rest = {}
        for monomial, c in self.terms.items():
            if monomial[var] == top:
                reduced = list(monomial)
                reduced[var] = 0
                rest[tuple(reduced)] = c
        return Polynomial.from_terms(rest, self.nvars)

    # -----------------------------------------------------------------
    # Ring arithmetic
    # -----------------------------------------------------------------
    def _check_compatible(self, other):
        if self.nvars != other.nvars:
            raise IncompatibleVariables(
                "Cannot combine a polynomial in {0} variables with one in {1}".format(self.nvars, other.nvars))

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check_compatible(other)
            return other
        return Polynomial.constant(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        return Polynomial(self._poly + other._poly, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-self._poly, self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check_compatible(other)
        return Polynomial(self._poly * other._poly, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("Polynomials cannot be raised to negative powers")
        return Polynomial(self._poly ** int(exponent), self.nvars)

    def scale(self, factor):
        factor = to_fraction(factor)
        return Polynomial(self._poly * sympy.Rational(factor.numerator, factor.denominator), self.nvars)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return False
        return self.nvars == other.nvars and self.terms == other.terms

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -----------------------------------------------------------------
    # Calculus and projective bookkeeping
    # -----------------------------------------------------------------
    def partial(self, var):
        if var not in (0, 1, 2):
            raise IncompatibleVariables("Variable index must be 0, 1 or 2, got {0}".format(var))
        return Polynomial(self._poly.diff(GENS[var]), self.nvars)

    def gradient(self):
        start = 0 if self.nvars == HOMOGENEOUS else 1
        return tuple(self.partial(i) for i in range(start, 3))

    def homogenize(self):
        if self.nvars != AFFINE:
            raise IncompatibleVariables("Only affine polynomials can be homogenized")
        if self.is_zero:
            return Polynomial(self._poly, HOMOGENEOUS)
        return Polynomial(self._poly.homogenize(X0), HOMOGENEOUS)

    def dehomogenize(self):
        if self.nvars != HOMOGENEOUS:
            raise IncompatibleVariables("Only homogeneous polynomials can be dehomogenized")
        if not self.is_homogeneous:
            raise NotHomogeneous("{0} is not homogeneous".format(self))
        terms = {}
        for (e0, e1, e2), c in self.terms.items():
            terms[(0, e1, e2)] = terms.get((0, e1, e2), 0) + c
        return Polynomial.from_terms(terms, AFFINE)

    def shear(self, factor):
        """f(X1 + factor * X2, X2); solutions (x', y) map back to (x' + factor * y, y)."""
        factor = sympy.Rational(str(to_fraction(factor)))
        expr = self.as_expr().subs(X1, X1 + factor * X2)
        return Polynomial.from_expr(sympy.expand(expr), self.nvars)

    def primitive(self):
        """
        Content-normalized copy: integer coefficients with gcd 1 and a positive
        leading coefficient. Defines the same curve.
        """
        if self.is_zero:
            return self
        _, cleared = self._poly.clear_denoms(convert=True)
        _, prim = cleared.primitive()
        if prim.LC() < 0:
            prim = -prim
        return Polynomial(prim.as_expr(), self.nvars)

    def to_poly(self, *gens, **kwargs):
        """The underlying polynomial as a sympy Poly in ``gens`` (default domain QQ)."""
        kwargs.setdefault("domain", QQ)
        return Poly(self.as_expr(), *gens, **kwargs)

    def univariate(self):
        """
        The polynomial as a univariate sympy Poly, for polynomials in at most
        one variable. Constants are returned in X1.
        """
        variables = self.variables
        if len(variables) > 1:
            raise IncompatibleVariables("{0} is not univariate".format(self))
        gen = GENS[variables[0]] if variables else X1
        return Poly(self.as_expr(), gen, domain=QQ)

    # -----------------------------------------------------------------
    # Evaluation
    # -----------------------------------------------------------------
    def _active(self):
        return (1, 2) if self.nvars == AFFINE else (0, 1, 2)

    def _check_arity(self, values):
        if len(values) != self.nvars:
            raise IncompatibleVariables(
                "Expected {0} coordinates, got {1}".format(self.nvars, len(values)))

    def eval_rat(self, point):
        values = [to_fraction(v) for v in point]
        self._check_arity(values)
        active = self._active()
        total = Fraction(0)
        for monomial, c in self.terms.items():
            term = c
            for slot, index in enumerate(active):
                if monomial[index]:
                    term *= values[slot] ** monomial[index]
            total += term
        return total

    def eval_interval(self, box):
        """
        Enclosure of the range of the polynomial over ``box`` (one Interval per
        coordinate). The result is inclusion-monotone in the box.
        """
        box = [Interval.coerce(b) for b in box]
        self._check_arity(box)
        active = self._active()
        top = max([self.degree, 0])
        powers = [[b ** k for k in range(top + 1)] for b in box]
        lo = hi = Fraction(0)
        for monomial, c in self.terms.items():
            term = Interval(c)
            for slot, index in enumerate(active):
                if monomial[index]:
                    term = term * powers[slot][monomial[index]]
            lo += term.lo
            hi += term.hi
        return Interval(lo, hi)

    def numeric(self):
        """Floating evaluation for display and sampling (numpy broadcasting)."""
        if self._numeric is None:
            symbols = [GENS[i] for i in self._active()]
            object.__setattr__(self, "_numeric", sympy.lambdify(symbols, self.as_expr(), "numpy"))
        return self._numeric

    # -----------------------------------------------------------------
    # Printing
    # -----------------------------------------------------------------
    def __str__(self):
        if self.is_zero:
            return "0"
        ordered = sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)
        pieces = []
        for monomial, c in ordered:
            factors = []
            for index, exponent in enumerate(monomial):
                if exponent == 1:
                    factors.append(NAMES[index])
                elif exponent > 1:
                    factors.append("{0}^{1}".format(NAMES[index], exponent))
            magnitude = abs(c)
            if not factors:
                body = format_fraction(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_fraction(magnitude)] + factors)
            sign = "-" if c < 0 else "+"
            if not pieces:
                pieces.append(body if sign == "+" else "-" + body)
            else:
                pieces.append("{0} {1}".format(sign, body))
        return " ".join(pieces)

    def __repr__(self):
        return "Polynomial('{0}', nvars={1})".format(self, self.nvars)


# ---------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------
def _build_grammar():
    rational = pp.Regex(r"\d+(?:/\d+)?")
    identifier = pp.Regex(r"[A-Za-z_][A-Za-z0-9_]*")
    exponent = pp.Regex(r"-?\d+")
    sign = pp.one_of("+ -")

    def make_rational(s, loc, toks):
        value = Fraction(toks[0])
        return Poly(sympy.Rational(value.numerator, value.denominator), *GENS, domain=QQ)

    def make_variable(s, loc, toks):
        name = toks[0]
        if name not in VARIABLE_ALIASES:
            raise UnknownIdentifier(name, loc)
        return Poly(GENS[VARIABLE_ALIASES[name]], *GENS, domain=QQ)

    def check_exponent(s, loc, toks):
        value = int(toks[0])
        if value < 0:
            raise NegativeExponent(value, loc)
        return value

    def make_power(toks):
        base = toks[0]
        if len(toks) == 1:
            return base
        return base ** toks[1]

    def make_product(toks):
        result = toks[0]
        for factor in toks[1:]:
            result = result * factor
        return result

    def make_sum(toks):
        toks = list(toks)
        negate = False
        if isinstance(toks[0], str):
            negate = toks.pop(0) == "-"
        result = -toks[0] if negate else toks[0]
        for op, term in zip(toks[1::2], toks[2::2]):
            result = result + term if op == "+" else result - term
        return result

    rational.set_parse_action(make_rational)
    identifier.set_parse_action(make_variable)
    exponent.set_parse_action(check_exponent)

    expr = pp.Forward()
    base = rational | identifier | (pp.Suppress("(") + expr + pp.Suppress(")"))
    factor = (base + pp.Optional(pp.Suppress("^") - exponent)).set_parse_action(make_power)
    term = (factor + pp.ZeroOrMore(pp.Suppress("*") + factor)).set_parse_action(make_product)
    expr <<= (pp.Optional(sign) + term + pp.ZeroOrMore(sign + term)).set_parse_action(make_sum)
    return expr


_GRAMMAR = _build_grammar()


def parse(text, nvars=None):
    """
    Parse polynomial text over X0, X1, X2 (``x`` and ``y`` alias X1, X2).

    :param text: expression built from rationals ``p/q``, variables, ``+ - * ^``
        and parentheses
    :param nvars: force 2 (affine) or 3 (homogeneous); by default a polynomial
        is homogeneous exactly when X0 occurs in it
    :rtype: Polynomial
    """
    try:
        result = _GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as exc:
        raise PolynomialSyntaxError(exc.msg, exc.loc)

    if nvars is None:
        nvars = HOMOGENEOUS if result.degree(X0) > 0 else AFFINE
    return Polynomial(result, nvars)


# ---------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------
def add(p, q):
    return p + q


def mul(p, q):
    return p * q


def pow(p, exponent):
    return p ** exponent


def scale(p, factor):
    return p.scale(factor)


def partial(p, var):
    return p.partial(var)


def homogenize(p):
    return p.homogenize()


def dehomogenize(p):
    return p.dehomogenize()


def eval_rat(p, point):
    return p.eval_rat(point)


def eval_interval(p, box):
    return p.eval_interval(box)


def _content(p, prim):
    """The rational c with p = c * prim."""
    monomial = next(iter(prim.terms))
    return p.terms[monomial] / prim.terms[monomial]


def resultant(p, q, var):
    """
    Resultant of ``p`` and ``q`` with respect to the variable ``var``: the
    determinant of their Sylvester matrix, a polynomial in the remaining
    variables.

    Elimination runs on the primitive parts over the integers and the exact
    value is restored from Res(a*P, b*Q) = a^deg(Q) * b^deg(P) * Res(P, Q).
    """
    if p.is_zero or q.is_zero:
        raise ZeroPolynomialError("Resultant of a zero polynomial")
    if p.nvars != q.nvars:
        raise IncompatibleVariables("Resultant operands differ in nvars")

    gen = GENS[var]
    others = [GENS[i] for i in p._active() if i != var]
    n, m = p.degree_in(var), q.degree_in(var)

    if n == 0 and m == 0:
        return Polynomial.constant(1, p.nvars)
    if n == 0:
        return p ** m
    if m == 0:
        return q ** n

    gens = [gen] + others
    p_prim, q_prim = p.primitive(), q.primitive()
    P = p_prim.to_poly(*gens, domain=ZZ)
    Q = q_prim.to_poly(*gens, domain=ZZ)

    method = djpolar_settings.get_resultant_method()
    logger.debug("resultant in %s of degrees %d and %d (%s)", NAMES[var], n, m, method)
    with polyconfig.using(USE_COLLINS_RESULTANT=(method == "collins")):
        value = P.resultant(Q)

    result = Polynomial.from_expr(value.as_expr() if isinstance(value, Poly) else value, p.nvars)
    return result.scale(_content(p, p_prim) ** m * _content(q, q_prim) ** n)
