"""Kernel selection: the compiled extension when it was built, else pure Python."""
from . import _pykernels

try:
    from . import _ckernels as _impl
    BACKEND = "cython"
except ImportError:  # extension not built
    _impl = _pykernels
    BACKEND = "python"

enumerate_families = _impl.enumerate_families
partition = _impl.partition


def backends():
    """Map backend name to module for every backend importable here."""
    found = {"python": _pykernels}
    if _impl is not _pykernels:
        found["cython"] = _impl
    return found
