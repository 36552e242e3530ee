"""Kernel backend selection.

The compiled extension ``legphase._kernels_cy`` is preferred when it
imported cleanly; otherwise the pure-Python twin is used.  Set
``LEGPHASE_BACKEND=python`` or ``=compiled`` to force a choice (forcing
``compiled`` raises if the extension is unavailable).
"""

import os

from . import _kernels_py

_requested = os.environ.get("LEGPHASE_BACKEND", "").strip().lower()

if _requested == "python":
    kernels = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels_cy as _compiled
    except ImportError:
        _compiled = None
    if _compiled is not None:
        kernels = _compiled
        BACKEND = "compiled"
    elif _requested == "compiled":
        raise ImportError(
            "LEGPHASE_BACKEND=compiled but the legphase._kernels_cy extension "
            "is not built; install with the C extension or unset the variable"
        )
    else:
        kernels = _kernels_py
        BACKEND = "python"


def backend_name():
    """Name of the kernel backend selected at import: 'compiled' or 'python'."""
    return BACKEND


def available_backends():
    """Mapping of backend name to kernel module for everything importable here."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels_cy
        out["compiled"] = _kernels_cy
    except ImportError:
        pass
    return out
