# -*- coding: utf-8 -*-
"""
Exceptions module

All errors raised by curvegen derive from CurvegenError, so callers may catch a single class
"""


class CurvegenError(Exception):
    pass


class AnalysisError(CurvegenError):
    """
    Raised by the numerical and decision layers when an input violates a precondition
    """


class ZeroSheaf(AnalysisError):
    """
    Zero classes are rejected on construction, every statement of the engine assumes non-zero objects
    """


class InvalidClass(AnalysisError):
    """
    A class that is not the class of any coherent sheaf (negative rank, negative torsion length)
    """


class InvalidPiece(AnalysisError):
    pass


class NotLocallyFree(AnalysisError):
    pass


class NotSplit(AnalysisError):
    pass


class NotSemistable(AnalysisError):
    pass


class UnknownAssumptionTarget(AnalysisError):
    pass


class VerdictMismatch(AnalysisError):
    pass


class QueryError(CurvegenError):
    """
    Wraps an AnalysisError with the query that triggered it
    """
    def __init__(self, query, error):
        self.query = query
        self.error = error
        super(QueryError, self).__init__('{query}: {name}: {error}'.format(
            query=query, name=type(error).__name__, error=error
        ))


class DSLError(CurvegenError):
    def __init__(self, message, location=None):
        self.message = message
        self.location = location
        if location:
            message = '{location}: {message}'.format(location=location, message=message)
        super(DSLError, self).__init__(message)


class DSLSyntaxError(DSLError):
    def __init__(self, message, location=None, expected=()):
        self.expected = sorted(expected)
        if self.expected:
            message = '{message} (expected one of: {expected})'.format(
                message=message, expected=', '.join(self.expected)
            )
        super(DSLSyntaxError, self).__init__(message, location)


class DSLSemanticError(DSLError):
    pass
