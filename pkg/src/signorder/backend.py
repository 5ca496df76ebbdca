"""Kernel selection: compiled extension when available, pure Python otherwise.

Set SIGNORDER_PURE=1 to force the pure backend (used by the benchmark and
the equivalence tests).  Both backends expose the same functions with
identical semantics and identical random streams; see ``_kernels_pure``.
"""

from __future__ import annotations

import math
import os

from . import _kernels_pure as _pure

if os.environ.get("SIGNORDER_PURE", "") not in ("", "0"):
    _native = None
else:
    try:
        from . import _native  # type: ignore[attr-defined]
    except ImportError:
        _native = None

BACKEND = "native" if _native is not None else "pure"

splitmix_next = _pure.splitmix_next
shift_mod_for_degree = _pure.shift_mod_for_degree
trial_moduli = _pure.trial_moduli

_NATIVE_MAX_DEGREE = 10
_NATIVE_ELEM_MAX = 16


def expand_signs(moduli: list[int], positive: list[bool]) -> list[int] | None:
    if _native is not None and len(moduli) <= _NATIVE_MAX_DEGREE:
        return _native.expand_signs(list(moduli), list(positive))
    return _pure.expand_signs(list(moduli), list(positive))


def run_trials(
    state: int, positive: list[bool], want_signs: list[int], n_trials: int
) -> tuple[int, list[int] | None, int]:
    if _native is not None and len(positive) <= _NATIVE_MAX_DEGREE:
        return _native.run_trials(state, list(positive), list(want_signs), n_trials)
    return _pure.run_trials(state, positive, want_signs, n_trials)


def elem_sym_ints(values: list[int]) -> list[int]:
    """Exact E_0..E_len for nonnegative ints; compiled path when it fits in i128."""
    if (
        _native is not None
        and len(values) <= _NATIVE_ELEM_MAX
        and sum(math.log2(v + 1) for v in values) < 120.0
    ):
        return _native.elem_sym_ints(list(values))
    return _pure.elem_sym_ints(list(values))
