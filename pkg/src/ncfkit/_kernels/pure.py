"""Pure-Python oracle kernels.

Reference implementation of the hot loops: per-word sensitivity counts,
minimal sensitive block enumeration, and exact maximum disjoint-block
packing.  ncfkit._kernels.fastcore is a Cython translation with identical
semantics; this module is the fallback and the ground truth the compiled
backend is tested against.

Conventions: a truth table arrives as ``values`` (bytes of 0/1, length 2^n)
plus ``n``; words and blocks are plain ints (word = row index, block =
variable bitmask with bit i-1 for variable i).  Deterministic everywhere:
word maxima break ties toward the smallest row index, block lists are
ordered by size then lexicographically by index set.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

BACKEND_NAME = "pure"


@lru_cache(maxsize=None)
def _masks_by_size(n: int, k: int) -> tuple:
    """All k-subsets of n variables as bitmasks, lexicographic by index set."""
    out = []
    for combo in combinations(range(n), k):
        mask = 0
        for i in combo:
            mask |= 1 << i
        out.append(mask)
    return tuple(out)


def sensitivity_at(values: bytes, n: int, word: int) -> int:
    fx = values[word]
    return sum(1 for i in range(n) if values[word ^ (1 << i)] != fx)


def sensitivity_max(values: bytes, n: int) -> tuple:
    """(s, witness word); the first word attaining the maximum wins."""
    best = -1
    best_word = 0
    for word in range(len(values)):
        fx = values[word]
        count = 0
        for i in range(n):
            if values[word ^ (1 << i)] != fx:
                count += 1
        if count > best:
            best = count
            best_word = word
    return best, best_word

def sensitivity_sum(values: bytes, n: int) -> int:
    total = 0
    for word in range(len(values)):
        fx = values[word]
        for i in range(n):
            if values[word ^ (1 << i)] != fx:
                total += 1
    return total


def minimal_blocks(values: bytes, n: int, word: int, max_size: int) -> list:
    """Minimal sensitive blocks at a word, sizes capped at ``max_size``.

    A block is sensitive when flipping it changes the value; it is minimal
    when no proper subset is sensitive.  Scanning sizes upward means a
    candidate is minimal iff it contains no previously found block.
    """
    fx = values[word]
    found: list = []
    for size in range(1, max_size + 1):
        for mask in _masks_by_size(n, size):
            if values[word ^ mask] == fx:
                continue
            if any(b & mask == b for b in found):
                continue
            found.append(mask)
    return found


def pack_max_disjoint(blocks: list, n: int) -> tuple:
    """Exact maximum pairwise-disjoint subfamily: (count, chosen blocks).

    Depth-first branch and bound over blocks in their given (size, lex)
    order; the lexicographically first maximum packing is returned.
    """
    nb = len(blocks)
    sizes = [b.bit_count() for b in blocks]
    best = 0
    best_sel: list = []
    sel: list = []

    def dfs(start: int, used: int, count: int) -> None:
        nonlocal best, best_sel
        if count > best:
            best = count
            best_sel = sel.copy()
        if start >= nb:
            return
        free = n - used.bit_count()
        if free == 0:
            return
        # every unused block has size >= sizes[start] (ascending order)
        if count + min(nb - start, free // sizes[start]) <= best:
            return
        for idx in range(start, nb):
            b = blocks[idx]
            if b & used:
                continue
            sel.append(b)
            dfs(idx + 1, used | b, count + 1)
            sel.pop()

    dfs(0, 0, 0)
    return best, best_sel


def block_at(values: bytes, n: int, word: int, max_size: int) -> tuple:
    """(block sensitivity at word, witness blocks), block sizes <= max_size."""
    blocks = minimal_blocks(values, n, word, max_size)
    return pack_max_disjoint(blocks, n)


def block_max(values: bytes, n: int, max_size: int) -> tuple:
    """(max block sensitivity, witness word, witness blocks) over all words."""
    best = 0
    best_word = 0
    best_sel: list = []
    for word in range(len(values)):
        blocks = minimal_blocks(values, n, word, max_size)
        if len(blocks) <= best:
            continue  # packing cannot exceed the number of blocks
        count, sel = pack_max_disjoint(blocks, n)
        if count > best:
            best = count
            best_word = word
            best_sel = sel
    return best, best_word, best_sel


def bs_profile(values: bytes, n: int) -> tuple:
    """Size-capped block sensitivity for every cap at once.

    Returns (profile, witness word, witness blocks) where profile[l-1] is
    the block sensitivity restricted to blocks of at most l variables, for
    l = 1..n.  The witness belongs to the uncapped value profile[n-1].
    Shares one minimal-block enumeration per word across all caps.
    """
    max_l = [0] * (n + 1)  # index 0 unused
    wit_word = 0
    wit_blocks: list = []
    for word in range(len(values)):
        blocks = minimal_blocks(values, n, word, n)
        if not blocks:
            continue
        # boundary[l] = how many blocks have size <= l (blocks are size-sorted)
        boundary = [0] * (n + 1)
        idx = 0
        for l in range(1, n + 1):
            while idx < len(blocks) and blocks[idx].bit_count() <= l:
                idx += 1
            boundary[l] = idx
        cur = 0
        cur_sel: list = []
        prev_bd = 0
        for l in range(1, n + 1):
            bd = boundary[l]
            # the packing can only grow past cur if new blocks outnumber it
            if bd > prev_bd and bd > cur:
                cur, cur_sel = pack_max_disjoint(blocks[:bd], n)
            prev_bd = bd
            if cur > max_l[l]:
                max_l[l] = cur
                if l == n:
                    wit_word = word
                    wit_blocks = cur_sel
    return max_l[1:], wit_word, wit_blocks
