"""
    Errors for the measures module.
"""

import builtins

from ..qcore.err import ConvergenceError

class MeasureKeyError(builtins.KeyError):
    """ Class for errors involving unknown families or measures. """

class MeasureValueError(builtins.ValueError):
    """ Class for errors involving invalid measure data or quadrature configuration. """

class QuadratureError(ConvergenceError):
    """ Class for errors raised when an adaptive quadrature or a measure sum fails to converge. """
