"""Exact polynomial algebra over the rationals, root-first.

Everything here works with ``fractions.Fraction`` so sign decisions are
never at the mercy of rounding.  Polynomials are monic and store their
coefficients leading term first (matching the way sign patterns read);
root configurations store positive roots and the moduli of negative roots
separately, sorted ascending, with repeats allowed for multiple roots.

JSON round-trips: rationals serialize as exact strings ("21/10", "-3"),
configurations as {"alpha": [...], "gamma": [...]}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .patterns import Couple, OrderWord, SignPattern

POLYNOMIAL_SCHEMA = "signorder.polynomial@1"
CONFIGURATION_SCHEMA = "signorder.configuration@1"


def parse_rational(text: str) -> Fraction:
    """Exact rational from "101/100", "1.01" or "-3" (decimals stay exact)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    return str(value)


def elementary_symmetric(values: Sequence[Fraction], j: int) -> Fraction:
    """e_j of the given values; e_0 = 1, e_{-1} = 0, e_j = 0 beyond len(values)."""
    if j < 0 or j > len(values):
        return Fraction(0)
    return elementary_symmetric_all(values)[j]


def elementary_symmetric_all(values: Sequence[Fraction]) -> list[Fraction]:
    """All of e_0 .. e_len in one O(len^2) pass of the product recurrence."""
    e = [Fraction(0)] * (len(values) + 1)
    e[0] = Fraction(1)
    for i, v in enumerate(values):
        for k in range(i + 1, 0, -1):
            e[k] += v * e[k - 1]
    return e


@dataclass(frozen=True)
class Polynomial:
    """Monic polynomial; ``coefficients`` run from the leading term down."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a polynomial needs at least one coefficient")
        if self.coefficients[0] != 1:
            raise ValueError("polynomials here are monic")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, exponent: int) -> Fraction:
        """Coefficient of x**exponent."""
        if not 0 <= exponent <= self.degree:
            return Fraction(0)
        return self.coefficients[self.degree - exponent]

    def evaluate(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def sign_pattern(self) -> SignPattern:
        """Signs leading -> constant; raises on a zero coefficient."""
        zeros = [self.degree - i for i, c in enumerate(self.coefficients) if c == 0]
        if zeros:
            raise ValueError(f"zero coefficient at exponent(s) {zeros}")
        return SignPattern(tuple(1 if c > 0 else -1 for c in self.coefficients))

    def __mul__(self, other: Polynomial) -> Polynomial:
        a = list(reversed(self.coefficients))
        b = list(reversed(other.coefficients))
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Polynomial(tuple(reversed(out)))

    def to_json(self) -> dict:
        return {
            "schema": POLYNOMIAL_SCHEMA,
            "degree": self.degree,
            "coefficients": [format_rational(c) for c in self.coefficients],
        }

    @classmethod
    def from_json(cls, data: dict) -> Polynomial:
        coeffs = tuple(parse_rational(c) for c in data["coefficients"])
        poly = cls(coeffs)
        if "degree" in data and data["degree"] != poly.degree:
            raise ValueError("degree field disagrees with coefficient count")
        return poly

    def __str__(self) -> str:
        parts: list[str] = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            exp = self.degree - i
            mag = abs(c)
            term = "x" if exp == 1 else f"x^{exp}" if exp > 1 else ""
            if mag != 1 or exp == 0:
                term = f"{mag}{'*' if term else ''}{term}"
            parts.append(("- " if c < 0 else "+ " if parts else "") + term)
        return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class RootConfiguration:
    """Positive roots and moduli of negative roots, each sorted ascending.

    Entries are positive rationals; repeats encode multiple roots.  The
    polynomial with this configuration is prod (x - a) * prod (x + g).
    """

    alpha: tuple[Fraction, ...]
    gamma: tuple[Fraction, ...]

    def __post_init__(self):
        for name, vals in (("alpha", self.alpha), ("gamma", self.gamma)):
            if any(v <= 0 for v in vals):
                raise ValueError(f"{name} entries must be positive moduli")
            if list(vals) != sorted(vals):
                raise ValueError(f"{name} entries must be sorted ascending")
        if not self.alpha and not self.gamma:
            raise ValueError("empty configuration")

    @property
    def degree(self) -> int:
        return len(self.alpha) + len(self.gamma)

    def roots(self) -> list[Fraction]:
        return list(self.alpha) + [-g for g in self.gamma]

    def moduli(self) -> list[tuple[Fraction, str, int]]:
        """All moduli sorted ascending as (value, kind, 1-based index in kind)."""
        tagged = [(a, "alpha", i + 1) for i, a in enumerate(self.alpha)]
        tagged += [(g, "gamma", i + 1) for i, g in enumerate(self.gamma)]
        return sorted(tagged, key=lambda t: t[0])

    def scaled(self, factor: Fraction) -> RootConfiguration:
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return RootConfiguration(
            tuple(a * factor for a in self.alpha), tuple(g * factor for g in self.gamma)
        )

    def to_json(self) -> dict:
        return {
            "schema": CONFIGURATION_SCHEMA,
            "alpha": [format_rational(a) for a in self.alpha],
            "gamma": [format_rational(g) for g in self.gamma],
        }

    @classmethod
    def from_json(cls, data: dict) -> RootConfiguration:
        return cls(
            tuple(sorted(parse_rational(a) for a in data.get("alpha", []))),
            tuple(sorted(parse_rational(g) for g in data.get("gamma", []))),
        )

    @classmethod
    def from_values(cls, alpha: Iterable, gamma: Iterable) -> RootConfiguration:
        conv = lambda vals: tuple(sorted(Fraction(v) for v in vals))
        return cls(conv(alpha), conv(gamma))

    def __str__(self) -> str:
        a = ", ".join(str(v) for v in self.alpha)
        g = ", ".join(str(v) for v in self.gamma)
        return f"alpha=({a}) gamma=({g})"


@dataclass(frozen=True)
class NonGenericReport:
    """Which genericity condition fails: vanished coefficients or tied moduli."""

    zero_exponents: tuple[int, ...]
    tied_moduli: tuple[tuple[tuple[str, int], tuple[str, int]], ...]

    def describe(self) -> str:
        bits = []
        if self.zero_exponents:
            bits.append(f"zero coefficient at exponent(s) {list(self.zero_exponents)}")
        for (k1, i1), (k2, i2) in self.tied_moduli:
            bits.append(f"tied moduli {k1}_{i1} = {k2}_{i2}")
        return "; ".join(bits) if bits else "generic"


def expand(roots: RootConfiguration) -> Polynomial:
    """Exact monic polynomial with the given roots (incremental linear factors)."""
    coeffs = [Fraction(1)]  # ascending while building
    for r in roots.roots():
        coeffs = [Fraction(0)] + coeffs
        for i in range(len(coeffs) - 1):
            coeffs[i] -= r * coeffs[i + 1]
    return Polynomial(tuple(reversed(coeffs)))


def order_word(roots: RootConfiguration) -> OrderWord | NonGenericReport:
    """The P/N word of the moduli, or a report when moduli tie."""
    tagged = roots.moduli()
    ties = tuple(
        ((a[1], a[2]), (b[1], b[2]))
        for a, b in zip(tagged, tagged[1:])
        if a[0] == b[0]
    )
    if ties:
        return NonGenericReport((), ties)
    return OrderWord("".join("P" if kind == "alpha" else "N" for _, kind, _ in tagged))


def classify(poly: Polynomial, roots: RootConfiguration) -> Couple | NonGenericReport:
    """The couple a generic expanded configuration defines.

    Raises if ``poly`` is not the exact expansion of ``roots``; returns a
    NonGenericReport (never a coerced couple) when a coefficient vanishes or
    moduli tie.
    """
    if poly != expand(roots):
        raise ValueError("polynomial is not the expansion of the given roots")
    zero_exponents = tuple(
        poly.degree - i for i, c in enumerate(poly.coefficients) if c == 0
    )
    order = order_word(roots)
    ties = order.tied_moduli if isinstance(order, NonGenericReport) else ()
    if zero_exponents or ties:
        return NonGenericReport(zero_exponents, ties)
    return Couple(poly.sign_pattern(), order)


def classify_roots(roots: RootConfiguration) -> Couple | NonGenericReport:
    return classify(expand(roots), roots)


def deflate_negative_root(poly: Polynomial, gamma: Fraction) -> Polynomial:
    """Exact division by (x + gamma); fails unless -gamma is a root."""
    if gamma <= 0:
        raise ValueError("gamma must be a positive modulus")
    quotient: list[Fraction] = []
    carry = Fraction(0)
    for c in poly.coefficients:
        carry = c + carry
        quotient.append(carry)
        carry = -gamma * carry
    remainder = quotient.pop()
    if remainder != 0:
        raise ValueError(f"-{gamma} is not a root (remainder {remainder})")
    return Polynomial(tuple(quotient))
