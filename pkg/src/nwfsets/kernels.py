"""Backend selection for the graph kernels.

The compiled extension is used when it imports; set ``NWFSETS_KERNELS=python``
to force the pure-Python implementation.
"""
import os

from . import _kernels_py

_forced = os.environ.get("NWFSETS_KERNELS", "").lower()

if _forced == "python":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        if _forced == "compiled":
            raise
        _impl = _kernels_py
        BACKEND = "python"

scc = _impl.scc
bisim_blocks = _impl.bisim_blocks
subset_tuples = _impl.subset_tuples


def available_backends():
    """Map backend name to kernel module for every backend importable here."""
    found = {"python": _kernels_py}
    try:
        from . import _kernels as compiled  # type: ignore[attr-defined]

        found["compiled"] = compiled
    except ImportError:
        pass
    return found
