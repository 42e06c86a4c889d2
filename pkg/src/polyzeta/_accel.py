"""Backend selection: the compiled ``_kernels`` extension when it imports,
otherwise ``_fallback``.  Set ``POLYZETA_PURE_PYTHON=1`` to force the
fallback."""
from __future__ import annotations

import os

from . import _fallback

BACKEND = "python"
kernels = _fallback

if os.environ.get("POLYZETA_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        pass
    else:
        kernels = _compiled
        BACKEND = "cython"

nested_harmonic_partial = kernels.nested_harmonic_partial
mc_polytope = kernels.mc_polytope
