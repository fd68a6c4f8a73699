"""Backend selection for the graph kernels.

The compiled module is used when it imports; set ``HASSEPOLY_PURE=1`` to
force the pure-Python fallback.
"""
import os
from types import ModuleType

from . import _pykernels

_FUNCS = ("closure", "bypassed", "longest_remaining", "mobius_table", "reentry")


def _load_compiled() -> ModuleType | None:
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels


_compiled = None if os.environ.get("HASSEPOLY_PURE") else _load_compiled()
_active: ModuleType = _compiled or _pykernels
BACKEND = "cython" if _compiled is not None else "python"


def available_backends() -> list[str]:
    names = ["python"]
    if _load_compiled() is not None:
        names.append("cython")
    return names


def get_backend(name: str) -> ModuleType:
    if name == "python":
        return _pykernels
    if name == "cython":
        mod = _load_compiled()
        if mod is None:
            raise ImportError("compiled kernels are not built")
        return mod
    raise ValueError(f"unknown backend {name!r}")


closure = _active.closure
bypassed = _active.bypassed
longest_remaining = _active.longest_remaining
mobius_table = _active.mobius_table
reentry = _active.reentry
