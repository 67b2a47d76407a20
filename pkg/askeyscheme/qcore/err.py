"""
    Errors for the :mod:`~askeyscheme.qcore` module.

    All numeric failures raised by the library derive from :class:`NumericError`,
    which the command line maps onto a single exit status.
"""

from __future__ import annotations

import builtins

class NumericError(builtins.ArithmeticError):
    """ Base class for numeric evaluation errors. """

class PoleError(NumericError, builtins.ZeroDivisionError): # pylint: disable = redefined-builtin
    """ Class for errors raised when a denominator factor vanishes. """

class DomainError(NumericError, builtins.ValueError): # pylint: disable = redefined-builtin
    """ Class for errors raised when an argument lies outside the domain of a function. """

class ConvergenceError(NumericError):
    """ Class for errors raised when a sum fails to meet its truncation criterion. """

class NumericOverflowError(NumericError, builtins.OverflowError): # pylint: disable = redefined-builtin
    """ Class for errors raised when intermediate magnitudes exceed binary64 range. """

class PrecisionError(NumericError):
    """ Class for errors raised when cancellation in a sum leaves fewer correct digits than required. """
