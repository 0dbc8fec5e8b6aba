import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import tables
from helpers import (
    and_table,
    constant_table,
    parity_table,
    projection_table,
)
from ncfkit import (
    Monotonicity,
    ParseError,
    TruthTable,
    decode_word,
    encode_word,
    flip,
)


class TestWords:
    def test_encode_decode_round_trip(self):
        for n in range(1, 6):
            for j in range(1 << n):
                assert encode_word(decode_word(j, n)) == j

    def test_encoding_is_lsb_first(self):
        # x_1 is bit 0: word 1 = (1, 0, 0)
        assert decode_word(1, 3) == (1, 0, 0)
        assert decode_word(4, 3) == (0, 0, 1)
        assert encode_word((0, 1)) == 2

    def test_flip_examples(self):
        assert flip((1, 0, 1), [1]) == (0, 0, 1)
        assert flip((1, 0, 1), []) == (1, 0, 1)
        assert flip((0, 0), [1, 2]) == (1, 1)

    def test_flip_out_of_range(self):
        with pytest.raises(ValueError):
            flip((0, 1), [3])

    @given(tables(max_n=5), st.data())
    def test_flip_involution(self, f, data):
        word = decode_word(data.draw(st.integers(0, len(f) - 1)), f.n)
        subset = data.draw(st.sets(st.integers(1, f.n)))
        assert flip(flip(word, subset), subset) == word


class TestConstruction:
    def test_from_string(self):
        t = TruthTable.from_string("0001")
        assert t.n == 2
        assert t.values == bytes([0, 0, 0, 1])

    def test_from_string_rejects_bad_char(self):
        with pytest.raises(ParseError) as exc:
            TruthTable.from_string("01x1")
        assert exc.value.position == 2

    def test_from_string_rejects_bad_length(self):
        with pytest.raises(ParseError):
            TruthTable.from_string("010")

    def test_hex_round_trip(self):
        for text in ("0001", "0111", "0110100110010110"):
            t = TruthTable.from_string(text)
            assert TruthTable.from_hex(t.to_hex()).values == t.values

    def test_hex_examples(self):
        assert TruthTable.from_string("0001").to_hex() == "0x1"
        assert TruthTable.from_hex("0x8").to_bitstring() == "1000"

    def test_hex_rejects_n1(self):
        with pytest.raises(ValueError):
            TruthTable.from_string("01").to_hex()

    def test_hex_rejects_garbage(self):
        with pytest.raises(ParseError):
            TruthTable.from_hex("12ab")
        with pytest.raises(ParseError) as exc:
            TruthTable.from_hex("0xg1")
        assert exc.value.position == 2

    def test_validation(self):
        with pytest.raises(ValueError):
            TruthTable(0, b"")
        with pytest.raises(ValueError):
            TruthTable(2, bytes([0, 1, 2, 0]))
        with pytest.raises(ValueError):
            TruthTable(2, bytes([0, 1]))

    def test_immutable(self):
        t = TruthTable.from_string("0001")
        with pytest.raises(AttributeError):
            t.n = 3

    def test_hashable_and_eq(self):
        a = TruthTable.from_string("0001")
        b = TruthTable(2, bytes([0, 0, 0, 1]))
        assert a == b and hash(a) == hash(b)


class TestEval:
    def test_and(self):
        t = and_table(2)
        assert t.eval((1, 1)) == 1
        assert t.eval((0, 1)) == 0

    def test_parity(self):
        assert parity_table(3).eval((1, 1, 0)) == 0
        assert parity_table(3).eval((1, 0, 0)) == 1

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            and_table(2).eval((1, 1, 1))


class TestRestrict:
    def test_and_restricted_to_one_is_identity(self):
        sub, mapping = and_table(2).restrict([(1, 1)])
        assert sub.to_bitstring() == "01"
        assert mapping == (2,)

    def test_and_restricted_to_zero_is_constant(self):
        sub, _ = and_table(2).restrict([(1, 0)])
        assert sub.to_bitstring() == "00"

    def test_x1_and_not_x2(self):
        # f = x1*(x2+1): rows 0100; fixing x2=0 leaves the identity on x1
        f = TruthTable.from_string("0100")
        sub, mapping = f.restrict([(2, 0)])
        assert sub.to_bitstring() == "01"
        assert mapping == (1,)

    def test_errors(self):
        f = and_table(2)
        with pytest.raises(ValueError):
            f.restrict([(1, 0), (1, 1)])
        with pytest.raises(ValueError):
            f.restrict([(1, 0), (2, 0)])
        with pytest.raises(ValueError):
            f.restrict([(3, 0)])

    @given(tables(min_n=3, max_n=6), st.data())
    @settings(max_examples=60)
    def test_sequential_matches_joint(self, f, data):
        i = data.draw(st.integers(1, f.n))
        j = data.draw(st.integers(1, f.n).filter(lambda v: v != i))
        bi = data.draw(st.integers(0, 1))
        bj = data.draw(st.integers(0, 1))
        joint, _ = f.restrict([(i, bi), (j, bj)])
        step1, map1 = f.restrict([(i, bi)])
        # translate j through the renumbering of the first restriction
        j_new = map1.index(j) + 1
        step2, _ = step1.restrict([(j_new, bj)])
        assert step2 == joint


class TestTransforms:
    def test_permute_projection(self):
        # f = x1 has rows 0101; swapping variables yields the x2 projection
        f = projection_table(2, 1)
        assert f.to_bitstring() == "0101"
        g = f.permute((2, 1))
        assert g == projection_table(2, 2)
        assert g.to_bitstring() == "0011"

    def test_permute_identity(self):
        f = TruthTable.from_string("0110")
        assert f.permute((1, 2)) == f

    def test_permute_swaps_factors(self):
        # x1*(x2+1) rows 0100 becomes x2*(x1+1) rows 0010
        f = TruthTable.from_string("0100")
        assert f.permute((2, 1)).to_bitstring() == "0010"

    def test_permute_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            TruthTable.from_string("0110").permute((1, 1))

    def test_xor_shift_identity(self):
        f = and_table(2)
        assert f.xor_shift((0, 0)) == f

    def test_xor_shift_and_to_nor(self):
        assert and_table(2).xor_shift((1, 1)).to_bitstring() == "1000"

    def test_xor_shift_projection(self):
        assert projection_table(2, 1).xor_shift((1, 0)).to_bitstring() == "1010"

    @given(tables(max_n=6), st.data())
    @settings(max_examples=60)
    def test_xor_shift_involution(self, f, data):
        a = tuple(data.draw(st.integers(0, 1)) for _ in range(f.n))
        assert f.xor_shift(a).xor_shift(a) == f

    def test_complement_examples(self):
        assert and_table(2).complement().to_bitstring() == "1110"
        assert constant_table(3, 0).complement() == constant_table(3, 1)

    @given(tables(max_n=6))
    def test_complement_involution(self, f):
        assert f.complement().complement() == f

    @given(tables(max_n=6), st.data())
    @settings(max_examples=60)
    def test_weight_preservation(self, f, data):
        w = f.weight()
        sigma = data.draw(st.permutations(list(range(1, f.n + 1))))
        a = tuple(data.draw(st.integers(0, 1)) for _ in range(f.n))
        assert f.permute(sigma).weight() == w
        assert f.xor_shift(a).weight() == w
        assert f.complement().weight() == len(f) - w


class TestStructure:
    def test_essential_variables(self):
        assert and_table(2).essential_variables() == {1, 2}
        assert constant_table(2, 0).essential_variables() == frozenset()
        # f(x1,x2,x3) = x1*x2 ignores x3
        f = TruthTable.from_function(3, lambda w: w[0] & w[1])
        assert f.essential_variables() == {1, 2}

    def test_monotonicity(self):
        assert and_table(2).monotonicity() is Monotonicity.INCREASING
        assert and_table(2).complement().monotonicity() is Monotonicity.DECREASING
        assert parity_table(2).monotonicity() is Monotonicity.NEITHER
        assert constant_table(2, 1).monotonicity() is Monotonicity.BOTH

    @given(tables(max_n=6))
    @settings(max_examples=60)
    def test_complement_swaps_direction(self, f):
        assert f.complement().monotonicity() is f.monotonicity().complemented()
