"""Backend selection for the integration kernels.

The hot RK4 loops exist twice: a compiled extension (``_core``) and a
pure-numpy fallback (``_purekernels``) with identical call contracts. The
compiled version is picked when importable; set MOVINGWALL_BACKEND=python
to force the fallback or MOVINGWALL_BACKEND=compiled to fail loudly when
the extension is missing. ``python -m movingwall.benchmark`` times one
against the other.
"""

from __future__ import annotations

import os

from . import _purekernels

_choice = os.environ.get("MOVINGWALL_BACKEND", "auto").strip().lower()

if _choice not in ("auto", "compiled", "python"):
    raise ImportError(f"MOVINGWALL_BACKEND must be auto, compiled or python, not {_choice!r}")

if _choice == "python":
    _impl = _purekernels
    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        if _choice == "compiled":
            raise ImportError(
                "MOVINGWALL_BACKEND=compiled but the movingwall._core extension "
                "is not built; reinstall the package or drop the override"
            ) from None
        _impl = _purekernels
        BACKEND = "python"

spectral_evolve = _impl.spectral_evolve
fd_evolve = _impl.fd_evolve
