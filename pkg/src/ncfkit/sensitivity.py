"""Exact sensitivity and block-sensitivity oracles with witnesses.

Everything here is brute force on purpose: these functions are the ground
truth that the closed-form layer arithmetic is checked against, so they
never look at layer structure.  Per-word loops run in the selected kernel
backend (compiled or pure); see ncfkit._kernels.

Definitions.  The sensitivity of f at word x counts the single bits whose
flip changes f(x); s(f) is the maximum over words.  A block is a set of
variable indices whose joint flip changes f(x); the block sensitivity at x
is the size of the largest pairwise-disjoint family of blocks, and the
size-capped variant bs_l admits only blocks of at most l variables.  The
chain 0 <= s(f) <= bs_l(f) <= bs(f) <= n always holds, with bs_1 = s and
bs_n = bs.

Packing searches only minimal sensitive blocks.  That loses nothing: every
sensitive block contains a minimal sensitive one, and shrinking members of
a disjoint family keeps it disjoint (and keeps every size cap satisfied).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Mapping, Sequence, Tuple

from ._kernels import backend
from .errors import CapExceededError
from .truthtable import TruthTable, Word, decode_word, encode_word

#: Default caps; per-word sweeps are 2^n words and block enumeration is
#: another 2^n masks per word, so the block oracle cap sits lower.
SENSITIVITY_CAP = 16
BLOCK_CAP = 12

Block = FrozenSet[int]


def _check_cap(op: str, n: int, cap: int, max_n: int | None) -> None:
    limit = cap if max_n is None else max_n
    if n > limit:
        raise CapExceededError(op, n, limit)


def _mask_to_block(mask: int) -> Block:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def _word_arg(f: TruthTable, x: Sequence[int]) -> int:
    if len(x) != f.n:
        raise ValueError(f"word has {len(x)} bits, table has n={f.n}")
    return encode_word(x)


def sensitivity_at(f: TruthTable, x: Sequence[int]) -> int:
    """Number of single-bit flips of x that change f."""
    return backend.sensitivity_at(f.values, f.n, _word_arg(f, x))


def sensitivity_with_witness(
    f: TruthTable, max_n: int | None = None
) -> Tuple[int, Word]:
    """(s(f), first word attaining it in row order)."""
    _check_cap("sensitivity", f.n, SENSITIVITY_CAP, max_n)
    s, word = backend.sensitivity_max(f.values, f.n)
    return s, decode_word(word, f.n)


def sensitivity(f: TruthTable, max_n: int | None = None) -> int:
    return sensitivity_with_witness(f, max_n)[0]


def average_sensitivity(f: TruthTable, max_n: int | None = None) -> Fraction:
    """Mean of the per-word sensitivities, exact: (sum over x of s(f;x)) / 2^n."""
    _check_cap("average_sensitivity", f.n, SENSITIVITY_CAP, max_n)
    return Fraction(backend.sensitivity_sum(f.values, f.n), len(f.values))


def minimal_sensitive_blocks(
    f: TruthTable, x: Sequence[int], max_n: int | None = None
) -> List[Block]:
    """All minimal sensitive blocks at x, ordered by size then index set."""
    _check_cap("minimal_sensitive_blocks", f.n, BLOCK_CAP, max_n)
    masks = backend.minimal_blocks(f.values, f.n, _word_arg(f, x), f.n)
    return [_mask_to_block(m) for m in masks]


def block_sensitivity_at(
    f: TruthTable, x: Sequence[int], max_n: int | None = None
) -> Tuple[int, List[Block]]:
    """(bs(f;x), witness family of disjoint minimal blocks)."""
    _check_cap("block_sensitivity_at", f.n, BLOCK_CAP, max_n)
    count, masks = backend.block_at(f.values, f.n, _word_arg(f, x), f.n)
    return count, [_mask_to_block(m) for m in masks]


def block_sensitivity_with_witness(
    f: TruthTable, max_n: int | None = None
) -> Tuple[int, Word, List[Block]]:
    _check_cap("block_sensitivity", f.n, BLOCK_CAP, max_n)
    count, word, masks = backend.block_max(f.values, f.n, f.n)
    return count, decode_word(word, f.n), [_mask_to_block(m) for m in masks]


def block_sensitivity(f: TruthTable, max_n: int | None = None) -> int:
    return block_sensitivity_with_witness(f, max_n)[0]


def l_block_sensitivity(
    f: TruthTable, l: int, max_n: int | None = None
) -> int:
    """Block sensitivity over blocks of at most l variables."""
    if not 1 <= l <= f.n:
        raise ValueError(f"l must be in 1..{f.n}, got {l}")
    _check_cap("l_block_sensitivity", f.n, BLOCK_CAP, max_n)
    count, _word, _masks = backend.block_max(f.values, f.n, l)
    return count


def block_sensitivity_direct(f: TruthTable, x: Sequence[int]) -> int:
    """Cross-check oracle: search disjoint families over ALL sensitive blocks.

    Independent of the minimal-block route above; exponential in 2^n, so
    keep n tiny.  Exists purely so the two routes can be compared.
    """
    if f.n > 6:
        raise CapExceededError("block_sensitivity_direct", f.n, 6)
    word = _word_arg(f, x)
    fx = f.values[word]
    sensitive = [
        mask for mask in range(1, len(f.values)) if f.values[word ^ mask] != fx
    ]

    def grow(start: int, used: int) -> int:
        best = 0
        for i in range(start, len(sensitive)):
            b = sensitive[i]
            if b & used:
                continue
            got = 1 + grow(i + 1, used | b)
            if got > best:
                best = got
        return best

    return grow(0, 0)


@dataclass(frozen=True)
class SensitivityReport:
    """Sensitivity, block sensitivity, and all size-capped values at once.

    ``bs_l[l]`` maps each cap l = 1..n to its block sensitivity; bs_l[1]
    equals s and bs_l[n] equals bs.  Witnesses re-verify: flipping any
    listed block at ``bs_witness_word`` changes the function value.
    """

    s: int
    bs: int
    bs_l: Mapping[int, int]
    s_witness: Word
    bs_witness_word: Word
    bs_witness_blocks: Tuple[Block, ...]


def full_report(f: TruthTable, max_n: int | None = None) -> SensitivityReport:
    """Compute every measure in one block-enumeration sweep per word."""
    _check_cap("full_report", f.n, BLOCK_CAP, max_n)
    s, s_word = backend.sensitivity_max(f.values, f.n)
    profile, bs_word, masks = backend.bs_profile(f.values, f.n)
    bs_l = {l: profile[l - 1] for l in range(1, f.n + 1)}
    return SensitivityReport(
        s=s,
        bs=profile[-1],
        bs_l=bs_l,
        s_witness=decode_word(s_word, f.n),
        bs_witness_word=decode_word(bs_word, f.n),
        bs_witness_blocks=tuple(_mask_to_block(m) for m in masks),
    )
