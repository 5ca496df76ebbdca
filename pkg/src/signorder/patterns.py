"""Sign patterns, change-preservation words, moduli orders, and couples.

A sign pattern lists the coefficient signs of a monic polynomial from the
leading term down to the constant term, so it always starts with ``+``.  An
order word lists, walking the root moduli in increasing order, whether each
modulus belongs to a positive root (``P``) or a negative root (``N``).  A
compatible (pattern, order) pair is a couple — the unit every realizability
query in this package is phrased in.

Text encodings round-trip exactly: sign patterns as ``"++---+"`` or in block
notation ``"S(2,3,1)"``, change-preservation words as ``"pccpc"``, orders as
``"PNNPN"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


class ParseError(ValueError):
    """Malformed pattern/order text; ``position`` is the 0-based offender."""

    def __init__(self, message: str, text: str, position: int | None = None):
        self.text = text
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}: {text!r}")


class IncompatibleCoupleError(ValueError):
    pass


@dataclass(frozen=True)
class SignPattern:
    """Coefficient signs of a monic polynomial, leading term first.

    ``signs`` is a tuple over {+1, -1}; the first entry must be +1 and the
    length is degree+1.
    """

    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) < 2:
            raise ValueError("a sign pattern needs at least two entries")
        if self.signs[0] != 1:
            raise ValueError("monic convention: leading sign must be +1")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @property
    def degree(self) -> int:
        return len(self.signs) - 1

    @cached_property
    def changes(self) -> int:
        """Number of sign changes (written c-tilde in the glossary)."""
        return sum(1 for a, b in zip(self.signs, self.signs[1:]) if a != b)

    @property
    def preservations(self) -> int:
        return self.degree - self.changes

    @cached_property
    def blocks(self) -> tuple[int, ...]:
        """Run lengths of equal signs, e.g. (+,+,-,-,-,+) -> (2, 3, 1)."""
        out: list[int] = []
        run = 1
        for a, b in zip(self.signs, self.signs[1:]):
            if a == b:
                run += 1
            else:
                out.append(run)
                run = 1
        out.append(run)
        return tuple(out)

    @property
    def sign_text(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)

    @property
    def block_text(self) -> str:
        return "S(" + ",".join(str(b) for b in self.blocks) + ")"

    def cp(self) -> ChangePattern:
        """The change-preservation word: letter j is c iff signs j-1, j differ."""
        return ChangePattern(
            "".join("c" if a != b else "p" for a, b in zip(self.signs, self.signs[1:]))
        )

    def is_canonical(self) -> bool:
        """True iff no four consecutive signs (+,+,-,-), (-,-,+,+), (+,-,-,+), (-,+,+,-).

        Equivalently the cp word has no letter whose both neighbours differ
        from it (no 'cpc' or 'pcp' substring).  Canonical patterns are
        realizable only with their canonical order.
        """
        word = self.cp().word
        return "cpc" not in word and "pcp" not in word

    def canonical_order(self) -> OrderWord:
        """Read the cp word from the right, c -> P and p -> N."""
        return OrderWord(
            "".join("P" if ch == "c" else "N" for ch in reversed(self.cp().word))
        )

    @classmethod
    def from_blocks(cls, blocks: tuple[int, ...] | list[int]) -> SignPattern:
        if not blocks or any(b < 1 for b in blocks):
            raise ValueError(f"block sizes must be positive: {blocks}")
        signs: list[int] = []
        sign = 1
        for b in blocks:
            signs.extend([sign] * b)
            sign = -sign
        return cls(tuple(signs))

    @classmethod
    def from_text(cls, text: str) -> SignPattern:
        return parse_pattern(text)

    def __str__(self) -> str:
        return self.block_text


@dataclass(frozen=True)
class ChangePattern:
    """Word over {c, p}: c where consecutive coefficient signs differ."""

    word: str

    def __post_init__(self):
        if not self.word:
            raise ValueError("empty change-preservation word")
        for i, ch in enumerate(self.word):
            if ch not in "cp":
                raise ParseError("expected 'c' or 'p'", self.word, i)

    @property
    def degree(self) -> int:
        return len(self.word)

    def to_sign_pattern(self) -> SignPattern:
        signs = [1]
        for ch in self.word:
            signs.append(-signs[-1] if ch == "c" else signs[-1])
        return SignPattern(tuple(signs))

    def flipped(self) -> ChangePattern:
        return ChangePattern(self.word.translate(str.maketrans("cp", "pc")))

    def reversed_(self) -> ChangePattern:
        return ChangePattern(self.word[::-1])

    def __str__(self) -> str:
        return self.word


@dataclass(frozen=True)
class OrderWord:
    """Word over {P, N}, read left to right in increasing root modulus."""

    word: str

    def __post_init__(self):
        if not self.word:
            raise ValueError("empty order word")
        for i, ch in enumerate(self.word):
            if ch not in "PN":
                raise ParseError("expected 'P' or 'N'", self.word, i)

    @property
    def degree(self) -> int:
        return len(self.word)

    @property
    def positives(self) -> int:
        return self.word.count("P")

    @property
    def negatives(self) -> int:
        return self.word.count("N")

    def p_positions(self) -> tuple[int, ...]:
        """1-based positions of the P letters."""
        return tuple(i + 1 for i, ch in enumerate(self.word) if ch == "P")

    def nu(self) -> int:
        """For two-P orders: the number of N moduli below the larger P modulus."""
        pos = self.p_positions()
        if len(pos) != 2:
            raise ValueError(f"nu needs exactly two P letters, got {self.word!r}")
        return pos[1] - 2

    def is_trivial(self) -> bool:
        return self.positives == 0 or self.negatives == 0

    def is_alternating(self) -> bool:
        return all(a != b for a, b in zip(self.word, self.word[1:]))

    def is_rigid(self) -> bool:
        """Rigid orders (realizable with a single pattern): trivial or alternating."""
        return self.is_trivial() or self.is_alternating()

    def flipped(self) -> OrderWord:
        return OrderWord(self.word.translate(str.maketrans("PN", "NP")))

    def reversed_(self) -> OrderWord:
        return OrderWord(self.word[::-1])

    @classmethod
    def from_text(cls, text: str) -> OrderWord:
        return parse_order(text)

    def __str__(self) -> str:
        return self.word


@dataclass(frozen=True)
class Couple:
    """A compatible (sign pattern, order) pair."""

    pattern: SignPattern
    order: OrderWord

    def __post_init__(self):
        if self.pattern.degree != self.order.degree:
            raise IncompatibleCoupleError(
                f"degree mismatch: pattern {self.pattern.block_text} has degree "
                f"{self.pattern.degree}, order {self.order.word!r} has length "
                f"{self.order.degree}"
            )
        if self.pattern.changes != self.order.positives:
            raise IncompatibleCoupleError(
                f"incompatible couple: pattern {self.pattern.block_text} has "
                f"{self.pattern.changes} sign changes but order {self.order.word!r} "
                f"has {self.order.positives} P letters"
            )

    @property
    def degree(self) -> int:
        return self.pattern.degree

    @property
    def text(self) -> str:
        return f"{self.pattern.block_text}|{self.order.word}"

    def is_canonical_couple(self) -> bool:
        return self.order == self.pattern.canonical_order()

    def mirror(self) -> Couple:
        """Exchange c<->p and P<->N (the Q(x) -> (-1)^d Q(-x) involution)."""
        return Couple(self.pattern.cp().flipped().to_sign_pattern(), self.order.flipped())

    def reverse(self) -> Couple:
        """Read cp word and order from the right (the x^d Q(1/x)/Q(0) involution)."""
        return Couple(self.pattern.cp().reversed_().to_sign_pattern(), self.order.reversed_())

    def orbit(self) -> tuple[Couple, ...]:
        """The 2- or 4-element orbit under the two commuting involutions, sorted."""
        members = {self, self.mirror(), self.reverse(), self.mirror().reverse()}
        return tuple(sorted(members, key=lambda c: (c.pattern.sign_text, c.order.word)))

    def __str__(self) -> str:
        return self.text


def parse_pattern(text: str) -> SignPattern:
    """Parse ``"++---+"`` or block notation ``"S(2,3,1)"``."""
    stripped = text.strip()
    if stripped.upper().startswith("S"):
        body = stripped[1:].strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ParseError("block notation must look like S(2,3,1)", text)
        parts = body[1:-1].split(",")
        blocks = []
        for part in parts:
            part = part.strip()
            if not part.isdigit() or int(part) < 1:
                raise ParseError("block sizes must be positive integers", text,
                                 stripped.find(part) if part else None)
            blocks.append(int(part))
        return SignPattern.from_blocks(blocks)
    for i, ch in enumerate(stripped):
        if ch not in "+-":
            raise ParseError("expected '+' or '-'", stripped, i)
    if not stripped:
        raise ParseError("empty pattern", text)
    if stripped[0] != "+":
        raise ParseError("monic convention: pattern must start with '+'", stripped, 0)
    return SignPattern(tuple(1 if ch == "+" else -1 for ch in stripped))


def parse_order(text: str) -> OrderWord:
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty order", text)
    for i, ch in enumerate(stripped):
        if ch not in "PN":
            raise ParseError("expected 'P' or 'N'", stripped, i)
    return OrderWord(stripped)


def parse_cp(text: str) -> ChangePattern:
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty change-preservation word", text)
    for i, ch in enumerate(stripped):
        if ch not in "cp":
            raise ParseError("expected 'c' or 'p'", stripped, i)
    return ChangePattern(stripped)


# Operation-style aliases.

def sign_to_cp(pattern: SignPattern) -> ChangePattern:
    return pattern.cp()


def cp_to_sign(cp: ChangePattern) -> SignPattern:
    return cp.to_sign_pattern()


def canonical_order(pattern: SignPattern) -> OrderWord:
    return pattern.canonical_order()


def is_canonical_pattern(pattern: SignPattern) -> bool:
    return pattern.is_canonical()


def is_rigid_order(order: OrderWord) -> bool:
    return order.is_rigid()


def involution_m(couple: Couple) -> Couple:
    return couple.mirror()


def involution_r(couple: Couple) -> Couple:
    return couple.reverse()


def orbit(couple: Couple) -> tuple[Couple, ...]:
    return couple.orbit()


def nu_of_order(order: OrderWord) -> int:
    return order.nu()
