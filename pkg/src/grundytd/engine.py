"""Search-engine selection: compiled core when available, pure Python otherwise.

The compiled module handles universes of at most 63 bits (single machine
word); anything larger is routed to the pure-Python kernels, which use
arbitrary-precision ints.  Set GRUNDYTD_ENGINE=py to force the pure engine,
e.g. to compare results or benchmark.
"""

from __future__ import annotations

import os

from . import _kernels_py

_FORCE_PURE = os.environ.get("GRUNDYTD_ENGINE", "").lower() in ("py", "python", "pure")

if _FORCE_PURE:
    _compiled = None
else:
    try:
        from . import _kernels_c as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

_WORD_LIMIT = 1 << 63


def _pick(masks, universe):
    if _compiled is not None and universe < _WORD_LIMIT:
        return _compiled
    return _kernels_py


def max_cover_sequence(masks, universe):
    return _pick(masks, universe).max_cover_sequence(masks, universe)


def sequence_of_length(masks, universe, length):
    return _pick(masks, universe).sequence_of_length(masks, universe, length)


def game_cover_value(masks, universe):
    return _pick(masks, universe).game_cover_value(masks, universe)


def min_cover(masks, universe):
    return _pick(masks, universe).min_cover(masks, universe)


def max_minimal_cover(masks, universe):
    return _pick(masks, universe).max_minimal_cover(masks, universe)


def max_matching(adj, n, semistrong):
    if _compiled is not None and n <= 63:
        return _compiled.max_matching(adj, n, semistrong)
    return _kernels_py.max_matching(adj, n, semistrong)
