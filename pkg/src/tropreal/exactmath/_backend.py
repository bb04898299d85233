"""Select the row reduction backend at import time.

The compiled kernel is used when it has been built; ``TROPREAL_PURE=1`` in the
environment forces the pure-Python kernel (used by the benchmark and tests).
"""

import os

from . import _pykernel

BACKEND = "python"
_c = None
if os.environ.get("TROPREAL_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernel as _c

        BACKEND = "cython"
    except ImportError:
        _c = None


def rref_mod_p(rows, ncols, p):
    if _c is not None:
        return _c.rref_mod_p(rows, ncols, p)
    return _pykernel.rref_mod_p(rows, ncols, p)


def rref_int(rows, ncols):
    if _c is not None:
        try:
            return _c.rref_int(rows, ncols)
        except (OverflowError, TypeError):
            # TypeError: entries beyond int64 cannot even be loaded
            pass
    return _pykernel.rref_int(rows, ncols)
