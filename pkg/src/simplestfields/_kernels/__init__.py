"""Kernel backend selection.

The compiled extension is preferred when present; set SIMPLESTFIELDS_PURE=1
to force the pure-Python fallback (used by the benchmark and the backend
agreement tests).  Both backends implement the exact same functions.
"""

import os

if os.environ.get("SIMPLESTFIELDS_PURE") == "1":
    from . import pykernels as _impl
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import pykernels as _impl

BACKEND = _impl.BACKEND

zx_trim = _impl.zx_trim
zx_mul = _impl.zx_mul
zx_mod = _impl.zx_mod
zx_mulmod = _impl.zx_mulmod
zx_divexact = _impl.zx_divexact
vec_reduce_mod_rows = _impl.vec_reduce_mod_rows
solve_lower_coords = _impl.solve_lower_coords
hnf_rows = _impl.hnf_rows
zx_resultant = _impl.zx_resultant
