"""Exact rank/determinant kernels: compiled core with a pure-Python fallback.

The compiled extension is selected at import time when present; set
``LEFSCHETZ_PURE_KERNELS=1`` to force the fallback (the benchmark and the
cross-checking tests import both implementations explicitly).
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("LEFSCHETZ_PURE_KERNELS", "") not in ("", "0"):
    _impl = _pure
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND: str = _impl.BACKEND

_COMPILED_MODULUS_LIMIT = 1 << 31


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank over GF(p); moduli too wide for machine words go to the fallback."""
    if _impl is not _pure and p < _COMPILED_MODULUS_LIMIT:
        return _impl.rank_mod_p(rows, p)
    return _pure.rank_mod_p(rows, p)


def rank_bareiss(rows: list[list[int]]) -> int:
    return _impl.rank_bareiss(rows)


def det_bareiss(rows: list[list[int]]) -> int:
    return _impl.det_bareiss(rows)
