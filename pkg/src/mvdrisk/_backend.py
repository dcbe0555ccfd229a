"""Select the numerical kernel implementation at import time.

The compiled extension is preferred when present.  Set ``MVDRISK_BACKEND`` to
``python`` or ``compiled`` to force a choice; forcing ``compiled`` raises if
the extension was not built.
"""

from __future__ import annotations

import os

_requested = os.environ.get("MVDRISK_BACKEND", "").strip().lower()
if _requested not in ("", "compiled", "python"):
    raise ImportError(
        f"MVDRISK_BACKEND must be 'compiled' or 'python', got {_requested!r}"
    )

if _requested == "python":
    from . import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"


def active_backend() -> str:
    """Name of the kernel backend in use: 'compiled' or 'python'."""
    return BACKEND
