"""Selects the compiled kernels when available, else the pure-Python ones.

Set ``SWITCHSCAN_PURE=1`` to force the Python versions.
"""

import os

if os.environ.get("SWITCHSCAN_PURE"):
    from ._pykernels import BACKEND, is_trivial, mark_subsets, scan_range, switch_rows
else:
    try:
        from ._ckernels import BACKEND, is_trivial, mark_subsets, scan_range, switch_rows
    except ImportError:
        from ._pykernels import BACKEND, is_trivial, mark_subsets, scan_range, switch_rows

__all__ = ["BACKEND", "is_trivial", "mark_subsets", "scan_range", "switch_rows"]
