"""Numeric kernel backend selection.

Imports the compiled extension when present, else the pure-Python mirror.
TLFIBER_KERNELS=pure|compiled forces the choice (forcing `compiled` on a
box without the extension raises).
"""

import os

from . import _pure

_choice = os.environ.get("TLFIBER_KERNELS", "").strip().lower()

if _choice not in ("", "pure", "compiled"):
    raise ImportError(
        f"TLFIBER_KERNELS must be 'pure' or 'compiled', got {_choice!r}")

if _choice == "pure":
    _impl = _pure
else:
    try:
        from . import _core as _impl
    except ImportError:
        if _choice == "compiled":
            raise
        _impl = _pure

BACKEND = "compiled" if _impl is not _pure else "pure"

zeros = _impl.zeros
matmul = _impl.matmul
cap_apply = _impl.cap_apply
cup_apply = _impl.cup_apply
jacobi_eigh = _impl.jacobi_eigh
roots_simultaneous = _impl.roots_simultaneous


def available_backends():
    """name -> module, for tests and benchmarks."""
    out = {"pure": _pure}
    try:
        from . import _core
        out["compiled"] = _core
    except ImportError:
        pass
    return out
