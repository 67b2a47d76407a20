"""
    Errors for the families module.
"""

import builtins

class FamilyKeyError(builtins.KeyError):
    """ Class for errors involving unknown families, relations or generating functions. """

class FamilyValueError(builtins.ValueError):
    """ Class for errors involving invalid family parameters or descriptors. """
