"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``TOROMAPS_PURE=1`` in the environment to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
if os.environ.get("TOROMAPS_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
else:
    _impl = _kernels_py

canonical_code = _impl.canonical_code
count_cycles = _impl.count_cycles
rooted_maps = _impl.rooted_maps

__all__ = ["BACKEND", "canonical_code", "count_cycles", "rooted_maps"]
