"""Shared test fixtures: standard gates and naive reference oracles.

The naive oracles are deliberately written in a different style from the
package kernels (tuple words, explicit subset enumeration over ALL
sensitive blocks, no minimality reasoning) so that agreement between the
two is meaningful.
"""

from itertools import combinations, product

from ncfkit import TruthTable, flip


def and_table(n: int) -> TruthTable:
    return TruthTable(n, bytes(1 if j == (1 << n) - 1 else 0 for j in range(1 << n)))


def or_table(n: int) -> TruthTable:
    return TruthTable(n, bytes(0 if j == 0 else 1 for j in range(1 << n)))


def parity_table(n: int) -> TruthTable:
    return TruthTable(n, bytes(bin(j).count("1") & 1 for j in range(1 << n)))


def constant_table(n: int, value: int) -> TruthTable:
    return TruthTable(n, bytes([value]) * (1 << n))


def projection_table(n: int, i: int) -> TruthTable:
    return TruthTable(n, bytes((j >> (i - 1)) & 1 for j in range(1 << n)))


def all_tables(n: int):
    """Every Boolean function on n variables, as truth tables."""
    for code in range(1 << (1 << n)):
        yield TruthTable(n, bytes((code >> j) & 1 for j in range(1 << n)))


def all_words(n: int):
    for bits in product((0, 1), repeat=n):
        yield bits


def naive_sensitivity_at(f: TruthTable, word) -> int:
    base = f.eval(word)
    return sum(
        1 for i in range(1, f.n + 1) if f.eval(flip(word, [i])) != base
    )


def naive_sensitivity(f: TruthTable) -> int:
    return max(naive_sensitivity_at(f, w) for w in all_words(f.n))


def _max_disjoint(sets):
    """Largest pairwise-disjoint subfamily by plain recursive search."""

    def grow(start, used):
        best = 0
        for i in range(start, len(sets)):
            s = sets[i]
            if used & s:
                continue
            got = 1 + grow(i + 1, used | s)
            if got > best:
                best = got
        return best

    return grow(0, frozenset())


def naive_block_sensitivity_at(f: TruthTable, word, max_size=None) -> int:
    """Search over ALL sensitive blocks, not only minimal ones."""
    base = f.eval(word)
    limit = f.n if max_size is None else max_size
    sensitive = []
    for size in range(1, limit + 1):
        for block in combinations(range(1, f.n + 1), size):
            if f.eval(flip(word, block)) != base:
                sensitive.append(frozenset(block))
    return _max_disjoint(sensitive)


def naive_block_sensitivity(f: TruthTable, max_size=None) -> int:
    return max(
        naive_block_sensitivity_at(f, w, max_size) for w in all_words(f.n)
    )
