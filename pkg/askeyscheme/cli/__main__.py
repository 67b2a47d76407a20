"""
    Runs the command line interface, as ``python -m askeyscheme.cli``.
"""

import sys

from . import main

sys.exit(main())
