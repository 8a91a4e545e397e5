"""Select the H(n,r,s) kernel backend at import time.

The compiled ``_hkernel`` extension is used when it was built; otherwise, or
when ``GBS_SEP_PURE`` is set to a non-empty value, the pure-Python twin
``_hkernel_py`` is used.  Both expose the same functions.
"""

from __future__ import annotations

import importlib
import os
from types import ModuleType

__all__ = ["BACKEND", "kernel", "load"]


def load(name: str) -> ModuleType:
    """Return the ``"cython"`` or ``"python"`` backend module explicitly."""
    if name == "cython":
        return importlib.import_module("gbs_sep._hkernel")
    if name == "python":
        return importlib.import_module("gbs_sep._hkernel_py")
    raise ValueError(f"unknown kernel backend {name!r}")


def _select() -> tuple[str, ModuleType]:
    if not os.environ.get("GBS_SEP_PURE"):
        try:
            return "cython", load("cython")
        except ImportError:
            pass
    return "python", load("python")


BACKEND, kernel = _select()
