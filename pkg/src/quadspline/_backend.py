"""Selects the compiled kernels when available, the numpy fallback otherwise.

Set QUADSPLINE_PURE=1 to force the fallback (used by the benchmark and by
tests that compare the two implementations).
"""
import os

if os.environ.get("QUADSPLINE_PURE"):
    from . import _pure as _impl

    BACKEND = "pure"
else:
    try:
        from . import _speedups as _impl

        BACKEND = "compiled"
    except ImportError:
        from . import _pure as _impl

        BACKEND = "pure"

eval_batch = _impl.eval_batch
coeff_matrix_fill = _impl.coeff_matrix_fill


def backend_name() -> str:
    """Name of the kernel implementation in use ('compiled' or 'pure')."""
    return BACKEND
