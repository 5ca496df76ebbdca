# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: signed-128-bit twin of ``_kernels_pure``.

Same splitmix64 stream, same trial-generation rule, same results bit for
bit — the equivalence is pinned by tests.  Degrees are capped at 10 and
elementary-symmetric inputs at products below 2**120 so that every
intermediate fits a signed 128-bit integer; the backend wrapper falls back
to the pure kernels beyond that.
"""

from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    ctypedef long long int128 "__int128"

DEF MAX_DEGREE = 10
DEF MAX_ELEM = 16


cdef inline uint64_t _splitmix(uint64_t* state) nogil:
    state[0] = state[0] + <uint64_t>0x9E3779B97F4A7C15u
    cdef uint64_t z = state[0]
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9u
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EBu
    return z ^ (z >> 31)


cdef inline int _shift_mod(int degree) nogil:
    if degree <= 8:
        return 12
    if degree == 9:
        return 11
    if degree == 10:
        return 10
    return 8


cdef inline bint _expand_and_check(int64_t* moduli, signed char* positive,
                                   signed char* want_asc, int d,
                                   int128* coeffs) nogil:
    """Expand prod (x -+ m) in int128 and compare coefficient signs."""
    cdef int n = 0
    cdef int i, j
    cdef int128 r
    coeffs[0] = 1
    for i in range(d):
        r = moduli[i] if positive[i] else -moduli[i]
        n += 1
        coeffs[n] = coeffs[n - 1]
        for j in range(n - 1, 0, -1):
            coeffs[j] = coeffs[j - 1] - r * coeffs[j]
        coeffs[0] = -r * coeffs[0]
    for i in range(d + 1):
        if coeffs[i] == 0:
            return False
        if (coeffs[i] > 0) != (want_asc[i] > 0):
            return False
    return True


cdef object _i128_to_py(int128 v):
    # nonnegative values only
    cdef uint64_t lo = <uint64_t>v
    cdef uint64_t hi = <uint64_t>(v >> 64)
    if hi == 0:
        return int(lo)
    return (int(hi) << 64) | int(lo)


def expand_signs(list moduli, list positive):
    """Signs (leading -> constant) of the expansion; None on a zero coefficient."""
    cdef int d = len(moduli)
    if d > MAX_DEGREE:
        raise ValueError(f"degree {d} exceeds the compiled kernel limit")
    cdef int64_t mods[MAX_DEGREE]
    cdef signed char pos[MAX_DEGREE]
    cdef int128 coeffs[MAX_DEGREE + 1]
    cdef int i, j, n
    cdef int128 r
    for i in range(d):
        mods[i] = moduli[i]
        pos[i] = 1 if positive[i] else 0
    n = 0
    coeffs[0] = 1
    for i in range(d):
        r = mods[i] if pos[i] else -mods[i]
        n += 1
        coeffs[n] = coeffs[n - 1]
        for j in range(n - 1, 0, -1):
            coeffs[j] = coeffs[j - 1] - r * coeffs[j]
        coeffs[0] = -r * coeffs[0]
    out = []
    for i in range(d, -1, -1):
        if coeffs[i] == 0:
            return None
        out.append(1 if coeffs[i] > 0 else -1)
    return out


def run_trials(object state_in, list positive, list want_signs, long n_trials):
    """Identical contract to _kernels_pure.run_trials."""
    cdef int d = len(positive)
    if d > MAX_DEGREE:
        raise ValueError(f"degree {d} exceeds the compiled kernel limit")
    if len(want_signs) != d + 1:
        raise ValueError("want_signs must have length degree+1")
    cdef uint64_t state = <uint64_t>(<unsigned long long>state_in)
    cdef signed char pos[MAX_DEGREE]
    cdef signed char want_asc[MAX_DEGREE + 1]
    cdef int64_t mods[MAX_DEGREE]
    cdef int128 coeffs[MAX_DEGREE + 1]
    cdef int i
    for i in range(d):
        pos[i] = 1 if positive[i] else 0
    for i in range(d + 1):
        want_asc[i] = 1 if want_signs[d - i] > 0 else -1
    cdef int smod = _shift_mod(d)
    cdef long t
    cdef long hit = -1
    cdef uint64_t u
    cdef int shift
    cdef int64_t m
    with nogil:
        for t in range(n_trials):
            m = 0
            for i in range(d):
                u = _splitmix(&state)
                shift = <int>(u % <uint64_t>smod)
                u = _splitmix(&state)
                m = m + 1 + <int64_t>(u % ((<uint64_t>1) << shift))
                mods[i] = m
            if _expand_and_check(mods, pos, want_asc, d, coeffs):
                hit = t
                break
    if hit < 0:
        return -1, None, int(state)
    return hit, [int(mods[i]) for i in range(d)], int(state)


def elem_sym_ints(list values):
    """E_0..E_len of nonnegative integers; inputs must satisfy the i128 bound."""
    cdef int n = len(values)
    if n > MAX_ELEM:
        raise OverflowError("too many values for the compiled kernel")
    cdef int128 e[MAX_ELEM + 1]
    cdef int128 vals[MAX_ELEM]
    cdef int i, k
    cdef long long v
    for i in range(n):
        v = values[i]
        if v < 0:
            raise ValueError("values must be nonnegative")
        vals[i] = v
    for i in range(n + 1):
        e[i] = 0
    e[0] = 1
    for i in range(n):
        for k in range(i + 1, 0, -1):
            e[k] = e[k] + vals[i] * e[k - 1]
    return [_i128_to_py(e[k]) for k in range(n + 1)]
