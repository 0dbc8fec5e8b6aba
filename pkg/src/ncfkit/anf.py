"""Algebraic normal form: XOR of AND-monomials over the two-element field.

A polynomial is stored as a set of monomials, each monomial the set of
1-based variable indices it multiplies; the empty monomial is the constant
1 term.  Conversion to and from truth tables is the subset Moebius
transform over F_2, which is its own inverse.

Text grammar: terms joined by "+", each term either "1" or "x<i>" factors
joined by "*", e.g. ``x1*x3 + x2 + 1``.  A monomial appearing twice in the
input cancels (addition is mod 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet

from .errors import ParseError
from .truthtable import TruthTable

Monomial = FrozenSet[int]


def _mobius(bits: bytearray, n: int) -> None:
    """In-place subset transform mod 2; self-inverse."""
    for i in range(n):
        stride = 1 << i
        for j in range(1 << n):
            if j & stride:
                bits[j] ^= bits[j ^ stride]


@dataclass(frozen=True)
class AnfPolynomial:
    """Canonical polynomial form of an n-variable Boolean function."""

    n: int
    monomials: frozenset

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least one variable, got n={self.n}")
        canon = frozenset(frozenset(m) for m in self.monomials)
        object.__setattr__(self, "monomials", canon)
        for mono in canon:
            for i in mono:
                if not 1 <= i <= self.n:
                    raise ValueError(
                        f"variable index {i} out of range 1..{self.n}"
                    )

    @property
    def degree(self) -> int:
        return max((len(m) for m in self.monomials), default=0)

    def evaluate(self, word) -> int:
        acc = 0
        for mono in self.monomials:
            if all(word[i - 1] for i in mono):
                acc ^= 1
        return acc

    def to_table(self) -> TruthTable:
        """Expand to a truth table (inverse Moebius transform)."""
        n = self.n
        bits = bytearray(1 << n)
        for mono in self.monomials:
            mask = 0
            for i in mono:
                mask |= 1 << (i - 1)
            bits[mask] ^= 1
        _mobius(bits, n)
        return TruthTable(n, bytes(bits))

    def to_string(self) -> str:
        """Render with monomials in descending degree, ascending index order."""
        if not self.monomials:
            return "0"
        ordered = sorted(
            (tuple(sorted(m)) for m in self.monomials),
            key=lambda t: (-len(t), t),
        )
        terms = []
        for mono in ordered:
            terms.append("*".join(f"x{i}" for i in mono) if mono else "1")
        return " + ".join(terms)

    def __str__(self) -> str:
        return self.to_string()


def table_to_anf(table: TruthTable) -> AnfPolynomial:
    """Moebius transform of the value vector; exact inverse of ``to_table``."""
    bits = bytearray(table.values)
    _mobius(bits, table.n)
    monomials = []
    for mask in range(1 << table.n):
        if bits[mask]:
            monomials.append(
                frozenset(i + 1 for i in range(table.n) if mask >> i & 1)
            )
    return AnfPolynomial(table.n, frozenset(monomials))


def parse_anf(text: str, n: int | None = None) -> AnfPolynomial:
    """Parse the ANF text grammar.

    ``n`` defaults to the highest variable index that appears (minimum 1).
    Raises ParseError with the offset of the offending token.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty polynomial", 0, text)

    monomials: set[Monomial] = set()
    max_index = 0
    pos = 0
    for chunk in text.split("+"):
        term = chunk.strip()
        offset = pos + (len(chunk) - len(chunk.lstrip()))
        if not term:
            raise ParseError("empty term", offset, text)
        if term == "0":
            pos += len(chunk) + 1
            continue
        if term == "1":
            mono: Monomial = frozenset()
        else:
            indices = set()
            fpos = offset
            for factor_chunk in term.split("*"):
                factor = factor_chunk.strip()
                foff = fpos + (len(factor_chunk) - len(factor_chunk.lstrip()))
                if (
                    not factor.startswith("x")
                    or not factor[1:].isdigit()
                    or int(factor[1:]) < 1
                ):
                    raise ParseError(
                        f"expected variable like 'x3', got {factor!r}",
                        foff,
                        text,
                    )
                indices.add(int(factor[1:]))
                fpos += len(factor_chunk) + 1
            mono = frozenset(indices)
            max_index = max(max_index, max(indices))
        # mod-2 addition: a repeated monomial cancels
        if mono in monomials:
            monomials.discard(mono)
        else:
            monomials.add(mono)
        pos += len(chunk) + 1

    inferred = max(max_index, 1)
    if n is None:
        n = inferred
    elif n < max_index:
        raise ParseError(
            f"polynomial uses x{max_index} but n={n} was requested", 0, text
        )
    return AnfPolynomial(n, frozenset(monomials))
