"""Kernel backend selection.

Prefers the compiled extension, falls back to the pure-Python kernels.
``FIBPATH_KERNEL=py`` forces the fallback, ``FIBPATH_KERNEL=c`` makes a
missing extension an import error instead of a silent fallback.
"""

import os

from . import _kernels_py


def _load():
    forced = os.environ.get("FIBPATH_KERNEL", "").strip().lower()
    if forced in ("py", "pure", "python"):
        return _kernels_py, "pure"
    try:
        from . import _kernels
    except ImportError:
        if forced in ("c", "compiled"):
            raise ImportError(
                "FIBPATH_KERNEL=%s but the compiled kernels are not built" % forced
            ) from None
        return _kernels_py, "pure"
    return _kernels, "compiled"


kernels, BACKEND = _load()
