"""Realizability decision rules for couples.

Two rule families are implemented clause by clause:

* T1 — patterns with one sign change, block form S(m,n) of degree d=m+n-1.
  With p the 1-based position of the single P letter: for n <= m the couple
  is realizable iff p <= 2n-1; for m <= n iff p >= n-m+1 (at least n-m
  negative moduli below the positive root); for m = n every compatible
  order works.

* T2 — patterns with two sign changes and an isolated final block, S(m,n,1)
  of degree d=m+n.  With p1 < p2 the positions of the two P letters and
  nu = p2 - 2 (negative moduli below the larger positive root):
    (1) m>n, n=1: canonical pattern (canonical order only).
    (2) m>n>=4: realizable iff p1=1 and nu <= 2n-2.
    (3) m>n in {2,3}: clause (2)'s condition or the straddle order NPPN...N.
    (4) m=n>=4: realizable iff p1=1.
    (5) m=n in {2,3}: p1=1 or the straddle order.
    (6) m=1, n>=3: canonical pattern.
    (7) 2<=m<n, n>=5: realizable iff nu >= n-m.
    (8) S(1,1,1), S(1,2,1), S(2,3,1), S(2,4,1), S(3,4,1): explicit tables.

Fast paths: canonical patterns (no isolated change/preservation) and rigid
orders (trivial or alternating) are realizable exactly with the canonical
order correspondence.  Everything else is reduced along the Z2 x Z2
involution orbit; couples whose orbit never hits a supported shape come
back OutOfScope, a first-class answer rather than an error.

Every couple is decided through a deterministic orbit representative, so
the verdict status is constant on orbits by construction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

from .patterns import Couple, OrderWord, SignPattern


class Status(enum.Enum):
    REALIZABLE = "Realizable"
    NON_REALIZABLE = "NonRealizable"
    OUT_OF_SCOPE = "OutOfScope"


@dataclass(frozen=True)
class Verdict:
    status: Status
    clause: str | None
    reduction: str
    decided: Couple | None

    def to_json(self) -> dict:
        data = {
            "status": self.status.value,
            "clause": self.clause,
            "reduction": self.reduction,
        }
        if self.decided is not None:
            data["decided"] = {
                "pattern": self.decided.pattern.block_text,
                "order": self.decided.order.word,
            }
        return data


# Explicit realizable-order tables for clause (8).
TABLE_121 = frozenset({"NPP", "PNP", "PPN"})
TABLE_231 = frozenset({"NPPNN", "PPNNN", "PNPNN", "PNNPN", "PNNNP"})
TABLE_241 = frozenset({"PNNPNN", "PNNNPN", "PNNNNP"})
TABLE_341 = frozenset(
    {"PPNNNNN", "PNPNNNN", "PNNPNNN", "PNNNPNN", "PNNNNPN", "PNNNNNP"}
)


def shape_one_change(pattern: SignPattern) -> tuple[int, int] | None:
    """(m, n) when the pattern is S(m,n), else None."""
    blocks = pattern.blocks
    return (blocks[0], blocks[1]) if len(blocks) == 2 else None


def shape_two_change(pattern: SignPattern) -> tuple[int, int] | None:
    """(m, n) when the pattern is S(m,n,1), else None."""
    blocks = pattern.blocks
    if len(blocks) == 3 and blocks[2] == 1:
        return (blocks[0], blocks[1])
    return None


def straddle_order(degree: int) -> OrderWord:
    """NPPN...N — both positive moduli between the two smallest negatives."""
    if degree < 3:
        raise ValueError("straddle order needs degree >= 3")
    return OrderWord("NPP" + "N" * (degree - 3))


def _verdict(realizable: bool, clause: str) -> tuple[Status, str]:
    return (Status.REALIZABLE if realizable else Status.NON_REALIZABLE, clause)


def decide_one_change(couple: Couple) -> Verdict:
    """T1 for S(m,n) patterns; rejects any other shape."""
    mn = shape_one_change(couple.pattern)
    if mn is None:
        raise ValueError(f"pattern {couple.pattern.block_text} is not of shape S(m,n)")
    m, n = mn
    p = couple.order.p_positions()[0]
    if m == n:
        status, clause = _verdict(True, "T1.eq")
    elif n < m:
        status, clause = _verdict(p <= 2 * n - 1, "T1.upper")
    else:
        status, clause = _verdict(p >= n - m + 1, "T1.lower")
    return Verdict(status, clause, "identity", couple)


def decide_two_change(couple: Couple) -> Verdict:
    """T2 for S(m,n,1) patterns; rejects any other shape."""
    mn = shape_two_change(couple.pattern)
    if mn is None:
        raise ValueError(
            f"pattern {couple.pattern.block_text} is not of shape S(m,n,1)"
        )
    m, n = mn
    d = couple.degree
    order = couple.order
    p1, p2 = order.p_positions()
    nu = order.nu()
    if m > n:
        if n == 1:
            status, clause = _verdict(couple.is_canonical_couple(), "T2.1")
        elif n >= 4:
            status, clause = _verdict(p1 == 1 and nu <= 2 * n - 2, "T2.2")
        else:
            ok = (p1 == 1 and nu <= 2 * n - 2) or order == straddle_order(d)
            status, clause = _verdict(ok, "T2.3")
    elif m == n:
        if m == 1:
            status, clause = _verdict(True, "T2.B1")  # d=2, sole order PP
        elif m >= 4:
            status, clause = _verdict(p1 == 1, "T2.4")
        else:
            status, clause = _verdict(p1 == 1 or order == straddle_order(d), "T2.5")
    else:
        if m == 1 and n >= 3:
            status, clause = _verdict(couple.is_canonical_couple(), "T2.6")
        elif m >= 2 and n >= 5:
            status, clause = _verdict(nu >= n - m, "T2.7")
        elif (m, n) == (1, 2):
            status, clause = _verdict(order.word in TABLE_121, "T2.8")
        elif (m, n) == (2, 3):
            status, clause = _verdict(order.word in TABLE_231, "T2.8")
        elif (m, n) == (2, 4):
            status, clause = _verdict(order.word in TABLE_241, "T2.8")
        elif (m, n) == (3, 4):
            status, clause = _verdict(order.word in TABLE_341, "T2.8")
        else:  # pragma: no cover - the (m, n) partition above is exhaustive
            raise AssertionError(f"unhandled two-change shape ({m}, {n})")
    return Verdict(status, clause, "identity", couple)


def _decide_direct(couple: Couple) -> Verdict | None:
    """Decide the couple itself, without orbit reduction; None if unsupported."""
    if shape_two_change(couple.pattern) is not None:
        return decide_two_change(couple)
    if shape_one_change(couple.pattern) is not None:
        return decide_one_change(couple)
    if couple.pattern.is_canonical():
        status, clause = _verdict(couple.is_canonical_couple(), "canonical")
        return Verdict(status, clause, "identity", couple)
    if couple.order.is_rigid():
        status, clause = _verdict(couple.is_canonical_couple(), "rigid")
        return Verdict(status, clause, "identity", couple)
    return None


def _reduction_name(couple: Couple, member: Couple) -> str:
    if member == couple:
        return "identity"
    if member == couple.mirror():
        return "mirror"
    if member == couple.reverse():
        return "reverse"
    return "mirror+reverse"


def decide(couple: Couple) -> Verdict:
    """Decide a couple, reducing along its involution orbit when needed."""
    for member in couple.orbit():
        verdict = _decide_direct(member)
        if verdict is not None:
            return Verdict(
                verdict.status, verdict.clause, _reduction_name(couple, member), member
            )
    return Verdict(Status.OUT_OF_SCOPE, None, "none", None)


def patterns_of_degree(degree: int) -> Iterator[SignPattern]:
    """All 2**degree sign patterns of the given degree, in sign-text order."""
    for tail in product((1, -1), repeat=degree):
        yield SignPattern((1,) + tail)


def compatible_orders(pattern: SignPattern) -> Iterator[OrderWord]:
    """All orders compatible with the pattern, in text order."""
    d = pattern.degree
    for positions in combinations(range(d), pattern.changes):
        yield OrderWord(
            "".join("P" if i in positions else "N" for i in range(d))
        )


def _matches_shape(pattern: SignPattern, shape: str) -> bool:
    if shape == "all":
        return True
    if shape == "mn":
        return shape_one_change(pattern) is not None
    if shape == "mn1":
        return shape_two_change(pattern) is not None
    raise ValueError(f"unknown shape filter {shape!r} (expected mn, mn1 or all)")


@dataclass(frozen=True)
class EnumerationRow:
    couple: Couple
    verdict: Verdict

    def to_json(self) -> dict:
        order = self.couple.order
        pp = order.p_positions()
        return {
            "degree": self.couple.degree,
            "pattern": self.couple.pattern.block_text,
            "order": order.word,
            "status": self.verdict.status.value,
            "clause": self.verdict.clause,
            "nu": order.nu() if len(pp) == 2 else None,
            "p1": pp[0] if pp else None,
            "p2": pp[1] if len(pp) >= 2 else None,
        }


def enumerate_couples(degree: int, shape: str = "all") -> list[EnumerationRow]:
    """Decide every compatible couple of the degree whose pattern fits the filter."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    rows = []
    for pattern in patterns_of_degree(degree):
        if not _matches_shape(pattern, shape):
            continue
        for order in compatible_orders(pattern):
            couple = Couple(pattern, order)
            rows.append(EnumerationRow(couple, decide(couple)))
    return rows


def realizable_orders(pattern: SignPattern) -> list[OrderWord]:
    return [
        ow
        for ow in compatible_orders(pattern)
        if decide(Couple(pattern, ow)).status is Status.REALIZABLE
    ]
