"""Backend selection for the subset-matching kernels.

The compiled ``_ckernels`` extension is used when it is importable; setting
``FORCINGLAB_PURE_PYTHON=1`` forces the pure-Python ``_pykernels``.
"""

from __future__ import annotations

import os

from . import _pykernels

python_backend = _pykernels
compiled_backend = None

if os.environ.get("FORCINGLAB_PURE_PYTHON", "") not in ("", "0"):
    backend = _pykernels
else:
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None
    backend = compiled_backend or _pykernels

BACKEND = "cython" if backend is compiled_backend else "python"

count_matches = backend.count_matches
count_through = backend.count_through
flip_deltas = backend.flip_deltas
pair_index = _pykernels.pair_index
subset_code = _pykernels.subset_code
