"""Backend selector for the visibility kernel.

Uses the compiled extension when the build produced one, otherwise the numpy
fallback.  Set RELMETRIC_FORCE_PY_KERNELS=1 to force the fallback (used by
the parity tests and the benchmark).
"""

from __future__ import annotations

import os

from . import _kernels_py

CLEAN = _kernels_py.CLEAN
TOUCH = _kernels_py.TOUCH
CROSS = _kernels_py.CROSS

if os.environ.get("RELMETRIC_FORCE_PY_KERNELS"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

classify_candidates = _impl.classify_candidates
