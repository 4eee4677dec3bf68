"""Selects the enumeration kernel at import time.

The compiled extension is preferred when it imported cleanly; setting
CYCLOTWIST_PURE=1 in the environment forces the pure-Python reference
kernel (useful for benchmarking and for debugging the extension).
"""

import os

from . import _enum_py

BACKEND = "pure"
atoms = _enum_py.atoms

if not os.environ.get("CYCLOTWIST_PURE"):
    try:
        from . import _enumspeed

        BACKEND = "compiled"
        atoms = _enumspeed.atoms
    except ImportError:
        pass
