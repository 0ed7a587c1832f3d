"""Kernel backend selection.

The compiled extension is used when importable, the pure-Python mirror
otherwise.  SAPDENOISE_BACKEND=cython|python|auto (default auto) forces
the choice at import time; forcing "cython" without a built extension is
an error rather than a silent slowdown.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    from . import _kernels as _ext
except ImportError:
    _ext = None

_choice = os.environ.get("SAPDENOISE_BACKEND", "auto").lower()
if _choice == "python":
    kernels = _kernels_py
elif _choice == "cython":
    if _ext is None:
        raise ImportError(
            "SAPDENOISE_BACKEND=cython but the compiled extension is not available; "
            "reinstall with a C compiler or unset the variable"
        )
    kernels = _ext
elif _choice == "auto":
    kernels = _ext if _ext is not None else _kernels_py
else:
    raise ValueError(f"unknown SAPDENOISE_BACKEND value {_choice!r}")


def backend_name() -> str:
    """Name of the active kernel backend: "cython" or "python"."""
    return kernels.BACKEND_NAME


def available_backends() -> dict[str, object]:
    """Importable kernel modules keyed by backend name."""
    found = {_kernels_py.BACKEND_NAME: _kernels_py}
    if _ext is not None:
        found[_ext.BACKEND_NAME] = _ext
    return found
