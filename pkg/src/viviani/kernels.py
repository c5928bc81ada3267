"""Backend selection for the hot scan kernels.

Prefers the compiled extension and falls back to the numpy implementation
when it is missing (no compiler at install time) or when the
``VIVIANI_PURE_PYTHON`` environment variable is set.  ``BACKEND`` records
which one is active; both expose the same functions with identical
semantics, see ``benchmarks/bench_gridmin.py`` for the speed comparison.
"""

import os

from . import _gridmin_py

if os.environ.get("VIVIANI_PURE_PYTHON"):
    _impl = _gridmin_py
    BACKEND = "python"
else:
    try:
        from . import _gridmin as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _gridmin_py
        BACKEND = "python"

grid_min_2d = _impl.grid_min_2d
