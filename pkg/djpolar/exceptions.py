# -*- coding: utf-8 -*-
from __future__ import unicode_literals


class PolarError(Exception):
    pass


class PolynomialSyntaxError(PolarError):

    def __init__(self, message, position):
        super(PolynomialSyntaxError, self).__init__(
            "{message} (at offset {position})".format(message=message, position=position))
        self.position = position


class UnknownIdentifier(PolynomialSyntaxError):

    def __init__(self, name, position):
        super(UnknownIdentifier, self).__init__("Unknown identifier '{0}'".format(name), position)
        self.name = name


class NegativeExponent(PolynomialSyntaxError):

    def __init__(self, exponent, position):
        super(NegativeExponent, self).__init__("Negative exponent {0}".format(exponent), position)
        self.exponent = exponent


class IncompatibleVariables(PolarError):
    pass


class NotHomogeneous(PolarError):
    pass


class ZeroPolynomialError(PolarError):
    pass


class DegenerateQuadric(PolarError):
    pass


class PointAtInfinity(PolarError):
    pass


class InvalidFlag(PolarError):
    pass


class DegeneratePolar(PolarError):
    pass


class CommonComponentError(PolarError):
    pass


class NotSquarefree(PolarError):
    pass


class NotSingular(PolarError):
    pass


class SingularPoint(PolarError):
    pass


class NotRational(PolarError):
    pass


class NotOnCurve(PolarError):
    pass


class AmbiguousAssignment(PolarError):
    pass


class CenterOnCurve(PolarError):

    def __init__(self, message, center=None, quadric=None):
        super(CenterOnCurve, self).__init__(message)
        self.center = center
        self.quadric = quadric


class UnknownCorpusEntry(PolarError):
    pass


class JobSpecError(PolarError):
    pass


class SolverError(PolarError):
    pass
