"""Kernel backend selection.

The compiled Cython kernels are used when the extension was built; otherwise
the NumPy implementation takes over transparently. Set the environment
variable ``GAINDOUBLET_BACKEND=numpy`` before import to force the fallback
(useful for benchmarking and debugging).
"""

import os

_forced = os.environ.get("GAINDOUBLET_BACKEND", "").strip().lower()

if _forced in ("numpy", "python"):
    from . import _kernels_py as _impl
elif _forced in ("cython", "compiled"):
    from . import _kernels_cy as _impl  # ImportError here is deliberate
else:
    try:
        from . import _kernels_cy as _impl
    except ImportError:
        from . import _kernels_py as _impl

coupling_profile = _impl.coupling_profile
phase_slope_profile = _impl.phase_slope_profile
BACKEND = _impl.BACKEND_NAME
