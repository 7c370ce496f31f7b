"""Kernel selection.

The compiled extension is used when it imports; otherwise the pure-Python
module is used.  Setting ``TTMIN_PURE=1`` forces the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("TTMIN_PURE", "") not in ("", "0"):
    from ttmin._kernels_py import dt_cube_table, delta_vanishes
else:
    try:
        from ttmin._ckernels import dt_cube_table, delta_vanishes
        BACKEND = "cython"
    except ImportError:
        from ttmin._kernels_py import dt_cube_table, delta_vanishes

__all__ = ["BACKEND", "dt_cube_table", "delta_vanishes"]
