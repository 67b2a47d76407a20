"""
    Errors for the verify module.
"""

import builtins

class VerifyKeyError(builtins.KeyError):
    """ Class for errors involving unknown checks, equations, generating functions or limit relations. """

class VerifyValueError(builtins.ValueError):
    """ Class for errors involving invalid schedules, filters or check arguments. """
