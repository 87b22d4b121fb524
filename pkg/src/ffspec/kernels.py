"""Kernel backend selection.

The compiled ``_kernels`` extension is used when it is importable; otherwise
the numpy implementations in ``_kernels_py`` are used.  Setting
``FFSPEC_BACKEND=python`` forces the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("FFSPEC_BACKEND", "").lower() == "python":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "compiled"

build_exp_table = _impl.build_exp_table
power_map = _impl.power_map
ddt_row_counts = _impl.ddt_row_counts
value_counts = _impl.value_counts


def backends():
    """Return ``{name: module}`` for every available backend."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        out["compiled"] = _kernels
    return out
