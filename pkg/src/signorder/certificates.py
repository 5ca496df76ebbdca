"""Numerical stress suites for the symmetric-function inequality certificates.

Four families of exact-rational inequality checks back the non-existence
side of the decision rules.  Each family has a constraint region and a
conjunction of sign conditions asserted to be impossible inside it:

* family 1 — all moduli in (0,1]: the bridge coefficient
  t = -a*e_{n-1} + e_n + a*e_{n-3} - e_{n-2} cannot be positive while
  1/a - sum(1/g_j) is positive (or zero).
* family 6 — moduli >= 1, a in (0,1): the coefficient combination
  e_{n-1} - a*e_{n-2} - e_{n-3} + a*e_{n-4} cannot be negative while
  1/a > sum(1/g_j).  This family's asserted impossibility is FALSE near the
  lower boundary; the sampler finds exact violations (e.g. n=5, all
  g = 101/100, a = 1/10) and reports them rather than hiding them.
* family 7 — S(2,n,1)-side data in reversed form: g1<=g2<=g3<=a1<=g_j,
  c_{n+1} = -A1+G1+H1 <= 0 together with c2 < 0 is impossible.
* family 8 — S(3,5,1)-side data: g1<=..<=g5<=1<=g6<=a2 with a1=1,
  c7 < 0 together with c3 < 0 is impossible; in the equal-moduli corner the
  closed form K certifies the sign exactly.

Samplers draw exact rationals on a fixed grid (denominator M = 1000) with
deliberate boundary clustering and ties, evaluate the flags on
cleared-denominator integer forms, and re-check every reported sample
through the public Fraction-exact evaluators.  Reports carry no floats.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import backend
from .polyalgebra import elementary_symmetric_all, format_rational

GRID_DENOMINATOR = 1000

LEMMA_DEFAULT_N = {1: (2, 3, 4, 5, 6), 6: (5, 6, 7, 8), 7: (4, 5, 6, 7, 8), 8: (None,)}


def _frac(values: list[int], M: int) -> list[Fraction]:
    return [Fraction(v, M) for v in values]


def _e(values: list[Fraction], j: int, table: list[Fraction]) -> Fraction:
    if j < 0:
        return Fraction(0)
    if j > len(values):
        return Fraction(0)
    return table[j]


# ---------------------------------------------------------------------------
# Exact evaluators (the public, Fraction-only route).


@dataclass(frozen=True)
class Lemma1Sample:
    n: int
    gammas: tuple[Fraction, ...]
    alpha1: Fraction

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be >= 2")
        if len(self.gammas) != 2 * self.n - 2:
            raise ValueError(f"need {2 * self.n - 2} moduli, got {len(self.gammas)}")
        if any(not 0 < g <= 1 for g in self.gammas):
            raise ValueError("moduli must lie in (0, 1]")
        if self.alpha1 <= 0:
            raise ValueError("alpha1 must be positive")


@dataclass(frozen=True)
class Lemma1Quantities:
    e: tuple[Fraction, ...]
    t_next: Fraction
    G: Fraction
    slack: Fraction
    tau: Fraction
    conjunction_strict: bool  # t_next > 0 and slack > 0 (asserted impossible)
    conjunction_boundary: bool  # t_next > 0 and slack == 0 (asserted impossible)


def eval_lemma1(sample: Lemma1Sample) -> Lemma1Quantities:
    n = sample.n
    vals = list(sample.gammas)
    table = elementary_symmetric_all(vals)
    e = lambda j: _e(vals, j, table)
    t_next = (
        -sample.alpha1 * e(n - 1) + e(n) + sample.alpha1 * e(n - 3) - e(n - 2)
    )
    G = sum((Fraction(1) / g for g in vals), Fraction(0))
    slack = Fraction(1) / sample.alpha1 - G
    tau = -e(n - 1) + e(n - 3) - G * (e(n - 2) - e(n))
    return Lemma1Quantities(
        tuple(table),
        t_next,
        G,
        slack,
        tau,
        t_next > 0 and slack > 0,
        t_next > 0 and slack == 0,
    )


@dataclass(frozen=True)
class Lemma6Sample:
    n: int
    gammas: tuple[Fraction, ...]  # 2n-4 values, each >= 1
    alpha1: Fraction

    def __post_init__(self):
        if self.n < 5:
            raise ValueError("n must be >= 5")
        if len(self.gammas) != 2 * self.n - 4:
            raise ValueError(f"need {2 * self.n - 4} moduli, got {len(self.gammas)}")
        if any(g < 1 for g in self.gammas):
            raise ValueError("moduli must be >= 1")
        if not 0 < self.alpha1 < 1:
            raise ValueError("alpha1 must lie in (0, 1)")


@dataclass(frozen=True)
class Lemma6Quantities:
    e: tuple[Fraction, ...]
    lhs_bridge: Fraction  # e_{n-1} - a e_{n-2} - e_{n-3} + a e_{n-4}
    s_minus1: Fraction
    slack: Fraction  # 1/alpha1 - s_minus1
    lhs_substituted: Fraction  # s_minus1 (e_{n-1}-e_{n-3}) - e_{n-2} + e_{n-4}
    on_boundary: bool  # some modulus equals 1
    conjunction_strict: bool  # lhs_bridge < 0 and slack > 0 (asserted impossible)
    conjunction_boundary: bool  # lhs_bridge < 0 and slack == 0 (asserted impossible)


def eval_lemma6(sample: Lemma6Sample) -> Lemma6Quantities:
    n = sample.n
    vals = list(sample.gammas)
    table = elementary_symmetric_all(vals)
    e = lambda j: _e(vals, j, table)
    lhs = e(n - 1) - sample.alpha1 * e(n - 2) - e(n - 3) + sample.alpha1 * e(n - 4)
    s_minus1 = sum((Fraction(1) / g for g in vals), Fraction(0))
    slack = Fraction(1) / sample.alpha1 - s_minus1
    lhs_sub = s_minus1 * (e(n - 1) - e(n - 3)) - e(n - 2) + e(n - 4)
    return Lemma6Quantities(
        tuple(table),
        lhs,
        s_minus1,
        slack,
        lhs_sub,
        any(g == 1 for g in vals),
        lhs < 0 and slack > 0,
        lhs < 0 and slack == 0,
    )


@dataclass(frozen=True)
class Lemma7Quantities:
    A1: Fraction
    Am1: Fraction
    Am2: Fraction
    G1: Fraction
    Gm1: Fraction
    H1: Fraction
    Hm1: Fraction
    Lm2: Fraction
    delta: Fraction
    c_next: Fraction  # -A1 + G1 + H1
    c2: Fraction
    c2_over_delta: Fraction
    conjunction: bool  # c_next <= 0 and c2 < 0 (asserted impossible)


def eval_lemma7(alpha: tuple[Fraction, Fraction],
                gammas: tuple[Fraction, ...]) -> Lemma7Quantities:
    a1, a2 = alpha
    n = len(gammas)
    if n < 4:
        raise ValueError("need at least four negative moduli")
    if not 0 < a1 < a2:
        raise ValueError("need 0 < alpha1 < alpha2")
    low, high = gammas[:3], gammas[3:]
    if list(gammas) != sorted(gammas):
        raise ValueError("moduli must be sorted ascending")
    if any(g > a1 for g in low) or any(g < a1 for g in high):
        raise ValueError("region needs g1<=g2<=g3<=alpha1 and g_j>=alpha1 for j>=4")
    A1 = a1 + a2
    Am1 = 1 / a1 + 1 / a2
    Am2 = 1 / (a1 * a2)
    G1 = sum(low, Fraction(0))
    Gm1 = sum((1 / g for g in low), Fraction(0))
    H1 = sum(high, Fraction(0))
    Hm1 = sum((1 / g for g in high), Fraction(0))
    Lm2 = sum(
        (1 / (gammas[i] * gammas[j]) for i in range(n) for j in range(i + 1, n)),
        Fraction(0),
    )
    delta = a1 * a2
    for g in gammas:
        delta *= g
    c_next = -A1 + G1 + H1
    c2_over_delta = -Am1 * (Gm1 + Hm1) + Am2 + Lm2
    return Lemma7Quantities(
        A1, Am1, Am2, G1, Gm1, H1, Hm1, Lm2, delta,
        c_next, c2_over_delta * delta, c2_over_delta,
        c_next <= 0 and c2_over_delta < 0,
    )


@dataclass(frozen=True)
class Lemma8Quantities:
    A1: Fraction
    Am1: Fraction
    Am2: Fraction
    H1: Fraction
    Hm1: Fraction
    Hm2: Fraction
    Hm3: Fraction
    delta: Fraction
    c7: Fraction
    c3: Fraction
    c3_over_delta: Fraction
    conjunction: bool  # c7 < 0 and c3 < 0 (asserted impossible)


def eval_lemma8(alpha: tuple[Fraction, Fraction],
                gammas: tuple[Fraction, ...]) -> Lemma8Quantities:
    a1, a2 = alpha
    if a1 != 1:
        raise ValueError("alpha1 is normalized to 1 in this region")
    if len(gammas) != 6:
        raise ValueError("need exactly six negative moduli")
    if list(gammas) != sorted(gammas):
        raise ValueError("moduli must be sorted ascending")
    if gammas[4] > 1 or gammas[5] < 1 or a2 < gammas[5]:
        raise ValueError("region needs g1<=..<=g5<=1<=g6<=alpha2")
    return _lemma8_quantities(a1, a2, gammas)


def _lemma8_quantities(a1: Fraction, a2: Fraction,
                       gammas: tuple[Fraction, ...]) -> Lemma8Quantities:
    A1 = a1 + a2
    Am1 = 1 / a1 + 1 / a2
    Am2 = 1 / (a1 * a2)
    H1 = sum(gammas, Fraction(0))
    Hm1 = sum((1 / g for g in gammas), Fraction(0))
    Hm2 = sum(
        (1 / (gammas[i] * gammas[j]) for i in range(6) for j in range(i + 1, 6)),
        Fraction(0),
    )
    Hm3 = sum(
        (
            1 / (gammas[i] * gammas[j] * gammas[k])
            for i in range(6)
            for j in range(i + 1, 6)
            for k in range(j + 1, 6)
        ),
        Fraction(0),
    )
    delta = a1 * a2
    for g in gammas:
        delta *= g
    c7 = -A1 + H1
    c3_over_delta = -Am1 * Hm2 + Am2 * Hm1 + Hm3
    return Lemma8Quantities(
        A1, Am1, Am2, H1, Hm1, Hm2, Hm3, delta,
        c7, c3_over_delta * delta, c3_over_delta,
        c7 < 0 and c3_over_delta < 0,
    )


def lemma8_corner_K(r: Fraction, w: Fraction) -> Fraction:
    """Closed form governing the equal-moduli corner of family 8."""
    return (
        12 * r**3 + 25 * r**2 * w + 5 * r * w**2
        - 25 * r**2 - 30 * r * w - 5 * w**2 + 5 * r + 5 * w
    )


def lemma8_corner(r: Fraction, w: Fraction) -> dict:
    """Exact corner data: g1..g5=r, g6=w, alpha2=5r+w-1; checks a*r^3*w*(c3/d) == -2K.

    The identity is algebraic, so it is checked on the whole 0 < r <= 1 <= w
    square even where alpha2 = 5r+w-1 drops below g6 (outside the sampling
    region, which needs r >= 1/5).
    """
    if not 0 < r <= 1 <= w:
        raise ValueError("corner needs 0 < r <= 1 <= w")
    a = 5 * r + w - 1
    q = _lemma8_quantities(Fraction(1), a, (r, r, r, r, r, w))
    K = lemma8_corner_K(r, w)
    return {
        "r": r,
        "w": w,
        "alpha2": a,
        "K": K,
        "c3_over_delta": q.c3_over_delta,
        "identity_holds": a * r**3 * w * q.c3_over_delta == -2 * K,
    }


# ---------------------------------------------------------------------------
# Region sampling.


@dataclass(frozen=True)
class RegionReport:
    lemma: int
    n: int | None
    count: int
    seed: int
    violations: int
    boundary_violations: int
    first_violations: tuple[dict, ...]
    margin: str | None
    margin_sample: dict | None
    notes: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "schema": "signorder.certify@1",
            "lemma": self.lemma,
            "n": self.n,
            "count": self.count,
            "seed": self.seed,
            "violations": self.violations,
            "boundary_violations": self.boundary_violations,
            "first_violations": list(self.first_violations),
            "extremal_margin": self.margin,
            "extremal_sample": self.margin_sample,
            "notes": list(self.notes),
        }


def _rng_for(lemma: int, n: int | None, seed: int) -> random.Random:
    digest = hashlib.sha256(f"signorder.certify:{lemma}:{n}:{seed}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _sorted_draws(rng: random.Random, count: int, lo: int, hi: int,
                  stratum: int) -> list[int]:
    """Draws with boundary clustering and ties; stratum cycles per sample."""
    span = hi - lo
    if stratum == 1:  # cluster at the upper boundary
        vals = [hi - rng.randrange(0, max(1, span // 16)) for _ in range(count)]
    elif stratum == 2:  # ties: few distinct values, repeated
        base = [rng.randrange(lo, hi + 1) for _ in range(max(1, count // 2))]
        vals = [rng.choice(base) for _ in range(count)]
    elif stratum == 3:  # cluster at the lower boundary
        vals = [lo + rng.randrange(0, max(1, span // 16)) for _ in range(count)]
    else:
        vals = [rng.randrange(lo, hi + 1) for _ in range(count)]
    return sorted(min(hi, max(lo, v)) for v in vals)


class _Margin:
    """Tracks the extremal (largest) exact value of the margin quantity."""

    def __init__(self):
        self.value: Fraction | None = None
        self.sample: dict | None = None

    def offer(self, value: Fraction, sample_fn: Callable[[], dict]) -> None:
        if self.value is None or value > self.value:
            self.value = value
            self.sample = sample_fn()


def _lemma1_region(n: int, count: int, seed: int) -> RegionReport:
    M = GRID_DENOMINATOR
    rng = _rng_for(1, n, seed)
    k = 2 * n - 2
    violations = 0
    boundary_violations = 0
    first: list[dict] = []
    margin = _Margin()  # t_next among samples with slack >= 0; expect < 0

    def sample_dict(ks: list[int], a_exact: Fraction) -> dict:
        return {
            "n": n,
            "gammas": [format_rational(Fraction(v, M)) for v in ks],
            "alpha1": format_rational(a_exact),
        }

    for i in range(count):
        ks = _sorted_draws(rng, k, 1, M, i % 4)
        E = backend.elem_sym_ints(ks)
        mode = i % 4
        if mode == 2:
            # exact slack = 0 probe: alpha1* = E_k / (M * E_{k-1})
            a_exact = Fraction(E[k], M * E[k - 1])
            q = eval_lemma1(Lemma1Sample(n, tuple(_frac(ks, M)), a_exact))
            if q.conjunction_boundary or q.conjunction_strict:
                violations += 1
                boundary_violations += 1
                if len(first) < 3:
                    first.append(sample_dict(ks, a_exact))
            margin.offer(q.t_next, lambda: sample_dict(ks, a_exact))
            continue
        if mode == 1:
            near = max(1, E[k] // max(1, E[k - 1]))
            p = max(1, near + rng.randrange(-1, 2))
        else:
            p = rng.randrange(1, M + 1)
        En1 = E[n - 1]
        En = E[n] if n <= k else 0
        En2 = E[n - 2]
        En3 = E[n - 3] if n >= 3 else 0
        T = -p * En1 + En + M * M * (p * En3 - En2)
        slack_sign = E[k] - p * E[k - 1]
        if T > 0 and slack_sign >= 0:
            violations += 1
            a_exact = Fraction(p, M)
            q = eval_lemma1(Lemma1Sample(n, tuple(_frac(ks, M)), a_exact))
            if not (q.conjunction_strict or q.conjunction_boundary):
                raise AssertionError("integer fast path disagrees with exact eval")
            if len(first) < 3:
                first.append(sample_dict(ks, a_exact))
        if slack_sign >= 0:
            margin.offer(
                Fraction(T, M ** n), lambda: sample_dict(ks, Fraction(p, M))
            )
    notes = (
        "margin = largest bridge value t over samples with nonneg reciprocal slack",
    )
    return RegionReport(
        1, n, count, seed, violations, boundary_violations, tuple(first),
        format_rational(margin.value) if margin.value is not None else None,
        margin.sample, notes,
    )


def _lemma6_region(n: int, count: int, seed: int) -> RegionReport:
    M = GRID_DENOMINATOR
    U = 4 * M
    rng = _rng_for(6, n, seed)
    k = 2 * n - 4
    violations = 0
    boundary_violations = 0
    first: list[dict] = []
    margin = _Margin()  # min(-lhs_bridge, slack): positive iff violating

    def sample_dict(ks: list[int], p: int) -> dict:
        return {
            "n": n,
            "gammas": [format_rational(Fraction(v, M)) for v in ks],
            "alpha1": format_rational(Fraction(p, M)),
        }

    for i in range(count):
        stratum = i % 4
        if stratum == 2:
            ks = _sorted_draws(rng, k, M + 1, M + max(2, M // 64), 2)
        elif stratum == 3:
            ks = _sorted_draws(rng, k, M, U, 3)
        else:
            ks = _sorted_draws(rng, k, M, U, stratum)
        p = rng.randrange(1, M)
        E = backend.elem_sym_ints(ks)
        G10 = E[n - 1] - p * E[n - 2] - M * M * E[n - 3] + p * M * M * E[n - 4]
        G11 = E[k] - p * E[k - 1]
        if G10 < 0 and G11 > 0:
            violations += 1
            if any(v == M for v in ks):
                boundary_violations += 1
            q = eval_lemma6(Lemma6Sample(n, tuple(_frac(ks, M)), Fraction(p, M)))
            if not q.conjunction_strict:
                raise AssertionError("integer fast path disagrees with exact eval")
            if len(first) < 3:
                first.append(sample_dict(ks, p))
        if G10 < 0:
            lhs = Fraction(G10, M ** (n - 1))
            slack = Fraction(M * (E[k] - p * E[k - 1]), p * E[k])
            margin.offer(min(-lhs, slack), lambda: sample_dict(ks, p))
    notes = (
        "asserted-impossible conjunction is genuinely satisfiable near the "
        "lower boundary; violations are real findings, not sampler noise",
        "boundary_violations counts violating samples with some modulus "
        "exactly 1; the rest sit strictly inside the region",
        "margin = largest min(-bridge value, reciprocal slack); positive "
        "values are violations",
    )
    return RegionReport(
        6, n, count, seed, violations, boundary_violations, tuple(first),
        format_rational(margin.value) if margin.value is not None else None,
        margin.sample, notes,
    )


def _lemma7_region(n: int, count: int, seed: int) -> RegionReport:
    M = GRID_DENOMINATOR
    rng = _rng_for(7, n, seed)
    violations = 0
    first: list[dict] = []
    margin = _Margin()  # -c2/delta over samples with c_next <= 0; expect < 0

    def sample_dict(ks: list[int], p1: int, p2: int) -> dict:
        return {
            "n": n,
            "gammas": [format_rational(Fraction(v, M)) for v in ks],
            "alpha1": format_rational(Fraction(p1, M)),
            "alpha2": format_rational(Fraction(p2, M)),
        }

    for i in range(count):
        stratum = i % 4
        p1 = rng.randrange(2, 3 * M)
        if stratum == 1:
            lows = sorted(max(1, p1 - rng.randrange(0, 2)) for _ in range(3))
            highs = sorted(p1 + rng.randrange(0, max(2, M // 16)) for _ in range(n - 3))
        elif stratum == 3:
            lows = _sorted_draws(rng, 3, 1, p1, 2)
            highs = _sorted_draws(rng, n - 3, p1, 8 * M, 2)
        else:
            lows = _sorted_draws(rng, 3, 1, p1, 0)
            highs = _sorted_draws(rng, n - 3, p1, 8 * M, 0)
        ks = lows + highs
        if stratum in (1, 2):
            target = sum(ks) - p1 + rng.randrange(-1, 2)
            p2 = max(p1 + 1, target)
        else:
            p2 = rng.randrange(p1 + 1, 16 * M)
        E = backend.elem_sym_ints(ks)
        c_next_num = sum(ks) - p1 - p2  # M * c_{n+1}
        C2 = -(p1 + p2) * E[n - 1] + E[n] + p1 * p2 * E[n - 2]
        if c_next_num <= 0 and C2 < 0:
            violations += 1
            q = eval_lemma7(
                (Fraction(p1, M), Fraction(p2, M)), tuple(_frac(ks, M))
            )
            if not q.conjunction:
                raise AssertionError("integer fast path disagrees with exact eval")
            if len(first) < 3:
                first.append(sample_dict(ks, p1, p2))
        if c_next_num <= 0:
            c2_over_delta = Fraction(M * M * C2, p1 * p2 * E[n])
            margin.offer(-c2_over_delta, lambda: sample_dict(ks, p1, p2))
    notes = (
        "margin = largest -c2/delta over samples with c_{n+1} <= 0; "
        "a positive value would be a violation",
    )
    return RegionReport(
        7, n, count, seed, violations, 0, tuple(first),
        format_rational(margin.value) if margin.value is not None else None,
        margin.sample, notes,
    )


def _lemma8_region(count: int, seed: int) -> RegionReport:
    M = GRID_DENOMINATOR
    rng = _rng_for(8, None, seed)
    violations = 0
    first: list[dict] = []
    margin = _Margin()  # -c3/delta over samples with c7 < 0; expect < 0

    def sample_dict(ks: list[int], q_num: int) -> dict:
        return {
            "gammas": [format_rational(Fraction(v, M)) for v in ks],
            "alpha1": "1",
            "alpha2": format_rational(Fraction(q_num, M)),
        }

    for i in range(count):
        stratum = i % 4
        if stratum == 1:
            low = sorted(M - rng.randrange(0, max(2, M // 32)) for _ in range(5))
            k6 = M + rng.randrange(0, max(2, M // 32))
        elif stratum == 3:
            low = _sorted_draws(rng, 5, 1, M, 2)
            k6 = M
        else:
            low = _sorted_draws(rng, 5, 1, M, stratum)
            k6 = rng.randrange(M, 6 * M)
        ks = low + [k6]
        if stratum in (1, 2):
            target = sum(ks) - M + rng.randrange(-1, 2)
            q_num = max(max(k6, M + 1), target)
        else:
            q_num = rng.randrange(max(k6, M + 1), 12 * M)
        E = backend.elem_sym_ints(ks)
        C7 = sum(ks) - M - q_num  # M * c7
        # c3/delta = (M^2 / (q * E6)) * C3
        C3 = -(q_num + M) * E[4] + E[5] + q_num * M * E[3]
        if C7 < 0 and C3 < 0:
            violations += 1
            q = eval_lemma8(
                (Fraction(1), Fraction(q_num, M)), tuple(_frac(ks, M))
            )
            if not q.conjunction:
                raise AssertionError("integer fast path disagrees with exact eval")
            if len(first) < 3:
                first.append(sample_dict(ks, q_num))
        if C7 < 0:
            c3_over_delta = Fraction(M * M * C3, q_num * E[6])
            margin.offer(-c3_over_delta, lambda: sample_dict(ks, q_num))
    notes = (
        "margin = largest -c3/delta over samples with c7 < 0; "
        "a positive value would be a violation",
    )
    return RegionReport(
        8, None, count, seed, violations, 0, tuple(first),
        format_rational(margin.value) if margin.value is not None else None,
        margin.sample, notes,
    )


def sample_region(lemma: int, count: int, seed: int,
                  n: int | None = None) -> RegionReport:
    """Draw ``count`` exact samples from the family's constraint region and
    report violations of its asserted-impossible conjunction."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if lemma == 1:
        return _lemma1_region(n if n is not None else 2, count, seed)
    if lemma == 6:
        return _lemma6_region(n if n is not None else 5, count, seed)
    if lemma == 7:
        return _lemma7_region(n if n is not None else 4, count, seed)
    if lemma == 8:
        if n is not None:
            raise ValueError("family 8 has no n parameter")
        return _lemma8_region(count, seed)
    raise ValueError(f"unknown certificate family {lemma} (expected 1, 6, 7 or 8)")


@dataclass(frozen=True)
class CornerReport:
    grid_points: int
    random_points: int
    identity_failures: int
    max_K: str
    max_K_at: dict

    def to_json(self) -> dict:
        return {
            "schema": "signorder.certify-corner@1",
            "grid_points": self.grid_points,
            "random_points": self.random_points,
            "identity_failures": self.identity_failures,
            "max_K": self.max_K,
            "max_K_at": self.max_K_at,
        }


def lemma8_corner_suite(random_points: int = 200, seed: int = 0,
                        grid_step: int = 100) -> CornerReport:
    """Grid plus random sweep of the family-8 corner: K < 0 and the exact
    identity a*r^3*w*(c3/delta) == -2K on every point."""
    rng = _rng_for(8, 99, seed)
    failures = 0
    best_K: Fraction | None = None
    best_at: dict = {}
    points = 0
    for i in range(1, grid_step + 1):
        r = Fraction(i, grid_step)
        for j in range(0, grid_step + 1):
            w = 1 + Fraction(j, grid_step)
            data = lemma8_corner(r, w)
            points += 1
            if not data["identity_holds"]:
                failures += 1
            if best_K is None or data["K"] > best_K:
                best_K = data["K"]
                best_at = {"r": format_rational(r), "w": format_rational(w)}
    for _ in range(random_points):
        r = Fraction(rng.randrange(1, 10_000), 10_000)
        w = 1 + Fraction(rng.randrange(0, 10_000), 10_000)
        data = lemma8_corner(r, w)
        if not data["identity_holds"]:
            failures += 1
        if data["K"] > best_K:
            best_K = data["K"]
            best_at = {"r": format_rational(r), "w": format_rational(w)}
    return CornerReport(
        points, random_points, failures, format_rational(best_K), best_at
    )
