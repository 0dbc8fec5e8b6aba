"""Immutable truth tables for Boolean functions of n variables.

Encoding contract (used everywhere in this package, including all text I/O):
row index j of the table holds f(word(j)), where word(j) decodes j with x_1
as the least-significant bit, i.e. x_i = bit (i-1) of j.  Words travel
through the public API as tuples of 0/1 ints, ``(x_1, ..., x_n)``.

Text formats:
  * binary string of length 2^n, character j (left to right) = f(word(j)),
    e.g. AND of two variables is "0001";
  * hex string prefixed "0x", the binary string read as a numeral with the
    j=0 character most significant, zero-padded to 2^n bits.  Defined for
    n >= 2 only (an n=1 table does not fill a whole nibble).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceededError, ParseError

#: Default cap on table construction; 2^20 rows = 1 MiB of values.
#: Module-level so callers who need bigger tables can raise it once.
MAX_VARS = 20

Word = tuple  # (x_1, ..., x_n), each 0 or 1


def encode_word(bits: Sequence[int]) -> int:
    """Pack ``(x_1, ..., x_n)`` into a row index, x_1 least significant."""
    j = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"word bits must be 0 or 1, got {b!r}")
        j |= b << i
    return j


def decode_word(j: int, n: int) -> Word:
    """Unpack row index ``j`` into the word ``(x_1, ..., x_n)``."""
    if not 0 <= j < (1 << n):
        raise ValueError(f"row index {j} out of range for n={n}")
    return tuple((j >> i) & 1 for i in range(n))


def flip(word: Sequence[int], indices: Iterable[int]) -> Word:
    """Complement the bits of ``word`` at the given 1-based variable indices.

    Applying the same index set twice restores the original word.
    """
    n = len(word)
    out = list(word)
    for i in indices:
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        out[i - 1] ^= 1
    return tuple(out)


class Monotonicity(enum.Enum):
    """Direction of a function under the coordinatewise partial order."""

    INCREASING = "increasing"
    DECREASING = "decreasing"
    BOTH = "both"  # constants only
    NEITHER = "neither"

    def complemented(self) -> "Monotonicity":
        if self is Monotonicity.INCREASING:
            return Monotonicity.DECREASING
        if self is Monotonicity.DECREASING:
            return Monotonicity.INCREASING
        return self


@dataclass(frozen=True)
class TruthTable:
    """Complete value table of an n-variable Boolean function.

    ``values[j] = f(word(j))`` with the LSB-first word encoding described in
    the module docstring.  Instances are immutable and hashable; every
    operation returns a new table, so tables can be shared freely across
    threads or worker processes.
    """

    n: int
    values: bytes

    def __post_init__(self):
        if not isinstance(self.values, bytes):
            object.__setattr__(self, "values", bytes(self.values))
        if self.n < 1:
            raise ValueError(f"need at least one variable, got n={self.n}")
        if self.n > MAX_VARS:
            raise CapExceededError("truth table", self.n, MAX_VARS)
        if len(self.values) != 1 << self.n:
            raise ValueError(
                f"expected {1 << self.n} values for n={self.n}, "
                f"got {len(self.values)}"
            )
        if any(v not in (0, 1) for v in self.values):
            raise ValueError("table values must be 0 or 1")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_bits(cls, n: int, bits: Iterable[int]) -> "TruthTable":
        return cls(n, bytes(bits))

    @classmethod
    def from_function(cls, n: int, fn) -> "TruthTable":
        """Tabulate ``fn(word)`` over all 2^n words."""
        return cls(n, bytes(fn(decode_word(j, n)) & 1 for j in range(1 << n)))

    @classmethod
    def from_string(cls, text: str) -> "TruthTable":
        """Parse the binary-string format ("0001" is AND of two variables)."""
        s = text.strip()
        if not s:
            raise ParseError("empty truth table", 0, text)
        for pos, ch in enumerate(s):
            if ch not in "01":
                raise ParseError(f"expected '0' or '1', got {ch!r}", pos, text)
        n = (len(s) - 1).bit_length()
        if len(s) != 1 << n or len(s) < 2:
            raise ParseError(
                f"table length {len(s)} is not a power of two >= 2", 0, text
            )
        return cls(n, bytes(int(c) for c in s))

    @classmethod
    def from_hex(cls, text: str) -> "TruthTable":
        """Parse the "0x..." format; digit count fixes n via 4*digits = 2^n."""
        s = text.strip()
        if not s.lower().startswith("0x"):
            raise ParseError("hex table must start with '0x'", 0, text)
        digits = s[2:]
        if not digits:
            raise ParseError("no hex digits after '0x'", 2, text)
        for pos, ch in enumerate(digits):
            if ch not in "0123456789abcdefABCDEF":
                raise ParseError(f"invalid hex digit {ch!r}", pos + 2, text)
        nbits = 4 * len(digits)
        n = (nbits - 1).bit_length()
        if nbits != 1 << n:
            raise ParseError(
                f"{len(digits)} hex digits is {nbits} bits, not a power of two",
                2,
                text,
            )
        value = int(digits, 16)
        # Leftmost table entry is the most significant bit of the numeral.
        bits = [(value >> (nbits - 1 - j)) & 1 for j in range(nbits)]
        return cls(n, bytes(bits))

    # -- basic queries -----------------------------------------------------

    def __len__(self) -> int:
        return len(self.values)

    def eval(self, word: Sequence[int]) -> int:
        """Value of the function at a word given as ``(x_1, ..., x_n)``."""
        if len(word) != self.n:
            raise ValueError(f"word has {len(word)} bits, table has n={self.n}")
        return self.values[encode_word(word)]

    def eval_index(self, j: int) -> int:
        return self.values[j]

    def weight(self) -> int:
        """Number of words mapped to 1."""
        return sum(self.values)

    def is_constant(self) -> bool:
        w = self.weight()
        return w == 0 or w == len(self.values)

    # -- symmetry transforms ----------------------------------------------

    def complement(self) -> "TruthTable":
        """Pointwise output flip; an involution."""
        return TruthTable(self.n, bytes(v ^ 1 for v in self.values))

    def xor_shift(self, shift: Sequence[int]) -> "TruthTable":
        """Table of ``x -> f(x xor shift)``; an involution for fixed shift."""
        if len(shift) != self.n:
            raise ValueError(
                f"shift has {len(shift)} bits, table has n={self.n}"
            )
        a = encode_word(shift)
        vals = self.values
        return TruthTable(self.n, bytes(vals[j ^ a] for j in range(len(vals))))

    def permute(self, sigma: Sequence[int]) -> "TruthTable":
        """Table of ``g(x_1,...,x_n) = f(x_sigma(1),...,x_sigma(n))``.

        ``sigma`` is given as a tuple with sigma[i-1] = sigma(i), and must be
        a bijection on 1..n.
        """
        n = self.n
        if sorted(sigma) != list(range(1, n + 1)):
            raise ValueError(f"{tuple(sigma)} is not a permutation of 1..{n}")
        vals = self.values
        out = bytearray(len(vals))
        for j in range(len(vals)):
            src = 0
            for i in range(n):
                src |= ((j >> (sigma[i] - 1)) & 1) << i
            out[j] = vals[src]
        return TruthTable(n, bytes(out))

    # -- restriction -------------------------------------------------------

    def restrict(
        self, assignments: Sequence[tuple[int, int]]
    ) -> tuple["TruthTable", tuple[int, ...]]:
        """Fix some variables and return the subfunction on the rest.

        ``assignments`` is a list of (variable index, bit).  Surviving
        variables are renumbered 1..n-k in ascending original order; the
        returned tuple maps each new index back to the original one
        (``mapping[new - 1] == original``).
        """
        n = self.n
        seen = set()
        for i, b in assignments:
            if not 1 <= i <= n:
                raise ValueError(f"variable index {i} out of range 1..{n}")
            if i in seen:
                raise ValueError(f"variable x{i} assigned twice")
            if b not in (0, 1):
                raise ValueError(f"assignment bit must be 0 or 1, got {b!r}")
            seen.add(i)
        if len(assignments) >= n:
            raise ValueError("cannot restrict every variable; use eval")

        fixed_mask = 0
        for i, b in assignments:
            fixed_mask |= b << (i - 1)
        survivors = tuple(i for i in range(1, n + 1) if i not in seen)
        m = len(survivors)
        vals = self.values
        out = bytearray(1 << m)
        for w in range(1 << m):
            j = fixed_mask
            for k, orig in enumerate(survivors):
                j |= ((w >> k) & 1) << (orig - 1)
            out[w] = vals[j]
        return TruthTable(m, bytes(out)), survivors

    # -- structure queries ---------------------------------------------------

    def essential_variables(self) -> frozenset:
        """Indices i for which some word x has f(x) != f(x with bit i flipped)."""
        vals = self.values
        essential = []
        for i in range(self.n):
            stride = 1 << i
            for j in range(len(vals)):
                if not j & stride and vals[j] != vals[j | stride]:
                    essential.append(i + 1)
                    break
        return frozenset(essential)

    def monotonicity(self) -> Monotonicity:
        """Direction over all covering pairs of words differing in one bit.

        Returns BOTH only for constants.
        """
        vals = self.values
        inc = dec = True
        for i in range(self.n):
            stride = 1 << i
            for j in range(len(vals)):
                if j & stride:
                    continue
                lo, hi = vals[j], vals[j | stride]
                if lo > hi:
                    inc = False
                elif lo < hi:
                    dec = False
                if not (inc or dec):
                    return Monotonicity.NEITHER
        if inc and dec:
            return Monotonicity.BOTH
        return Monotonicity.INCREASING if inc else Monotonicity.DECREASING

    # -- text formats --------------------------------------------------------

    def to_bitstring(self) -> str:
        return "".join(str(v) for v in self.values)

    def to_hex(self) -> str:
        if self.n < 2:
            raise ValueError("hex format is defined for n >= 2 only")
        nbits = len(self.values)
        value = 0
        for v in self.values:
            value = (value << 1) | v
        return "0x" + format(value, f"0{nbits // 4}x")

    def __str__(self) -> str:
        return self.to_bitstring()
