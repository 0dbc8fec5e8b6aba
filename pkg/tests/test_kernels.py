"""Backend equivalence: the compiled kernels must match the pure ones bit
for bit, including tie-breaking and block ordering."""

import random

import pytest

from ncfkit._kernels import pure

fastcore = pytest.importorskip(
    "ncfkit._kernels.fastcore", reason="compiled kernels not built"
)


def _random_cases(seed, count, max_n):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        values = bytes(rng.getrandbits(1) for _ in range(1 << n))
        word = rng.randrange(1 << n)
        yield n, values, word


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_sensitivity_kernels_agree(seed):
    for n, values, word in _random_cases(seed, 150, 8):
        assert pure.sensitivity_at(values, n, word) == fastcore.sensitivity_at(
            values, n, word
        )
        assert pure.sensitivity_max(values, n) == fastcore.sensitivity_max(
            values, n
        )
        assert pure.sensitivity_sum(values, n) == fastcore.sensitivity_sum(
            values, n
        )


@pytest.mark.parametrize("seed", [4, 5])
def test_block_kernels_agree(seed):
    for n, values, word in _random_cases(seed, 80, 7):
        for max_size in (1, (n + 1) // 2, n):
            assert pure.minimal_blocks(
                values, n, word, max_size
            ) == fastcore.minimal_blocks(values, n, word, max_size)
            assert pure.block_at(values, n, word, max_size) == fastcore.block_at(
                values, n, word, max_size
            )
            assert pure.block_max(values, n, max_size) == fastcore.block_max(
                values, n, max_size
            )
        assert pure.bs_profile(values, n) == fastcore.bs_profile(values, n)


def test_packing_agrees_with_plain_recursion():
    def naive_pack(blocks):
        def grow(i, used):
            best = 0
            for j in range(i, len(blocks)):
                if blocks[j] & used:
                    continue
                best = max(best, 1 + grow(j + 1, used | blocks[j]))
            return best

        return grow(0, 0)

    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(2, 9)
        nb = rng.randint(0, 12)
        blocks = sorted(
            {rng.randrange(1, 1 << n) for _ in range(nb)},
            key=lambda m: (bin(m).count("1"), m),
        )
        expected = naive_pack(blocks)
        for impl in (pure, fastcore):
            count, chosen = impl.pack_max_disjoint(blocks, n)
            assert count == expected
            used = 0
            for b in chosen:
                assert not (b & used)
                used |= b
            assert len(chosen) == count
        assert pure.pack_max_disjoint(blocks, n) == fastcore.pack_max_disjoint(
            blocks, n
        )


def test_selected_backend_is_exposed():
    from ncfkit._kernels import backend, backend_name

    assert backend_name() in ("pure", "compiled")
    assert backend.BACKEND_NAME == backend_name()
