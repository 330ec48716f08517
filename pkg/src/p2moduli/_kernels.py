"""Kernel selection: compiled extension when built, pure Python otherwise.

Set the environment variable ``P2MODULI_PURE=1`` to force the pure-Python
kernels even when the compiled extension is available (used by the
benchmark suite to compare the two).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("P2MODULI_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

mul_dense = _impl.mul_dense
div_exact_int = _impl.div_exact_int
div_binomial = _impl.div_binomial
mul_binomial = _impl.mul_binomial


def backend() -> str:
    """Name of the active kernel implementation: 'compiled' or 'pure'."""
    return "pure" if _impl is _kernels_py else "compiled"
