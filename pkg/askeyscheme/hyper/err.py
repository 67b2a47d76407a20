"""
    Errors for the :mod:`~askeyscheme.hyper` module.
"""

from __future__ import annotations

import builtins

from ..qcore.err import NumericError

class DivergentError(NumericError):
    """ Class for errors raised when a non-terminating series is evaluated outside its radius of convergence. """

class IdentityKeyError(builtins.KeyError): # pylint: disable = redefined-builtin
    """ Class for :mod:`~askeyscheme.hyper` identity catalog key errors. """

class IdentityValueError(builtins.ValueError): # pylint: disable = redefined-builtin
    """ Class for :mod:`~askeyscheme.hyper` identity catalog value errors. """
