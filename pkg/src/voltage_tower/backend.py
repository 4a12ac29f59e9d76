"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``VOLTAGE_TOWER_PURE_PYTHON=1`` to force the fallback (used by the
benchmark and by tests that compare the two paths).
"""

from __future__ import annotations

import os

from . import _kernel_py

_force_pure = os.environ.get("VOLTAGE_TOWER_PURE_PYTHON", "") not in ("", "0")

if _force_pure:
    _impl = _kernel_py
    KERNEL_BACKEND = "python"
else:
    try:
        from . import _kernel as _impl  # type: ignore[no-redef]

        KERNEL_BACKEND = "cython"
    except ImportError:
        _impl = _kernel_py
        KERNEL_BACKEND = "python"

bareiss_determinant = _impl.bareiss_determinant


def kernel_backend() -> str:
    """Name of the active determinant kernel: "cython" or "python"."""
    return KERNEL_BACKEND
