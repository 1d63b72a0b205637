"""Select the R-length search kernel at import time.

The compiled extension is used when it has been built; set
``KNOTDELTA_PURE_PYTHON=1`` to force the pure-Python kernel.
"""

import os

from . import _rlength_py

if os.environ.get("KNOTDELTA_PURE_PYTHON"):
    rlength = _rlength_py.rlength
    BACKEND = "python"
else:
    try:
        from ._rlength import rlength
        BACKEND = "compiled"
    except ImportError:
        rlength = _rlength_py.rlength
        BACKEND = "python"

enumerate_decompositions = _rlength_py.enumerate_decompositions
