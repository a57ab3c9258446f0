"""Selects the stability kernel implementation at import time.

The compiled extension (`quiverstab._stabcore`, built from Cython) is
used when it imported successfully, the instance is small enough for
64-bit arithmetic, and the environment variable QUIVERSTAB_PURE is not
set to a truthy value.  Everything else routes to the pure-Python twin,
which accepts arbitrary-precision weights.
"""

from __future__ import annotations

import os

from . import _stabcore_py as _pure

_compiled = None
if os.environ.get("QUIVERSTAB_PURE", "") in ("", "0"):
    try:
        from . import _stabcore as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

IMPLEMENTATION = "compiled" if _compiled is not None else "pure"

# |w(S) * r(X)| <= (sum |theta|) * n must stay below 2^63.
_INT64_GUARD = 1 << 62
_MAX_COMPILED_N = 20


def first_violation(n: int, right_mask: int, thetas):
    """Dispatch to the compiled kernel when safe, else the pure one."""
    if _compiled is not None and 0 < n <= _MAX_COMPILED_N:
        cap = 0
        for t in thetas:
            cap += t if t >= 0 else -t
        if cap * n < _INT64_GUARD:
            return _compiled.first_violation(n, right_mask, list(thetas))
    return _pure.first_violation(n, right_mask, thetas)


closed_subset_masks = _pure.closed_subset_masks
