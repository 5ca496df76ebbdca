"""Pure-Python kernels: reference implementation of the hot loops.

The compiled twin in ``_native.pyx`` must reproduce these bit for bit —
both run the same splitmix64 stream and the same trial-generation rule, so
a search started from one backend and finished on the other is identical.

Trial rule: a trial draws d strictly increasing integer moduli.  Each gap is
1 + (u mod 2**shift) with a fresh shift in [0, shift_mod) per gap, which
mixes tight clusters with near-geometric spreads.  shift_mod depends on the
degree so that every intermediate expansion coefficient stays below 2**126
(the compiled kernel works in signed 128-bit integers).
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


def splitmix_next(state: int) -> tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return state, z ^ (z >> 31)


def shift_mod_for_degree(degree: int) -> int:
    if degree <= 8:
        return 12
    if degree == 9:
        return 11
    if degree == 10:
        return 10
    return 8


def trial_moduli(state: int, degree: int) -> tuple[int, list[int]]:
    """Draw one trial's ascending distinct integer moduli; returns (state, moduli)."""
    smod = shift_mod_for_degree(degree)
    out: list[int] = []
    m = 0
    for _ in range(degree):
        state, u = splitmix_next(state)
        shift = u % smod
        state, u = splitmix_next(state)
        m = m + 1 + (u % (1 << shift))
        out.append(m)
    return state, out


def expand_signs(moduli: list[int], positive: list[bool]) -> list[int] | None:
    """Signs (leading -> constant) of prod over (x -+ m); None on a zero coefficient.

    ``positive[i]`` says modulus i is a positive root (factor x - m), else
    negative (factor x + m).
    """
    coeffs = [0] * (len(moduli) + 1)  # ascending
    coeffs[0] = 1
    n = 0
    for m, pos in zip(moduli, positive):
        r = m if pos else -m
        n += 1
        coeffs[n] = coeffs[n - 1]
        for i in range(n - 1, 0, -1):
            coeffs[i] = coeffs[i - 1] - r * coeffs[i]
        coeffs[0] = -r * coeffs[0]
    out: list[int] = []
    for c in reversed(coeffs[: n + 1]):
        if c == 0:
            return None
        out.append(1 if c > 0 else -1)
    return out


def run_trials(
    state: int,
    positive: list[bool],
    want_signs: list[int],
    n_trials: int,
) -> tuple[int, list[int] | None, int]:
    """Run up to n_trials; return (hit index or -1, hit moduli, new state).

    ``want_signs`` reads leading -> constant and must have length d+1.
    """
    d = len(positive)
    want_asc = list(reversed(want_signs))  # ascending to match the inner loop
    for t in range(n_trials):
        state, moduli = trial_moduli(state, d)
        coeffs = [0] * (d + 1)
        coeffs[0] = 1
        n = 0
        for m, pos in zip(moduli, positive):
            r = m if pos else -m
            n += 1
            coeffs[n] = coeffs[n - 1]
            for i in range(n - 1, 0, -1):
                coeffs[i] = coeffs[i - 1] - r * coeffs[i]
            coeffs[0] = -r * coeffs[0]
        ok = True
        for c, w in zip(coeffs, want_asc):
            if c == 0 or (c > 0) != (w > 0):
                ok = False
                break
        if ok:
            return t, moduli, state
    return -1, None, state


def elem_sym_ints(values: list[int]) -> list[int]:
    """E_0 .. E_len of nonnegative integers (exact, arbitrary precision)."""
    e = [0] * (len(values) + 1)
    e[0] = 1
    for i, v in enumerate(values):
        for k in range(i + 1, 0, -1):
            e[k] += v * e[k - 1]
    return e
