"""Kernel selection: compiled extension when available, pure Python otherwise.

Set FORGE_PURE_PYTHON=1 to force the fallback (the benchmark uses this to
compare both implementations).
"""

import os

if os.environ.get("FORGE_PURE_PYTHON") == "1":
    from . import plcore_py as plcore

    KERNEL = "python"
else:
    try:
        from . import plcore_c as plcore  # type: ignore[attr-defined]

        KERNEL = "compiled"
    except ImportError:
        from . import plcore_py as plcore

        KERNEL = "python"

__all__ = ["plcore", "KERNEL"]
