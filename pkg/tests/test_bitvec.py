import random
from itertools import product

import pytest

from codlib import BitVec


def test_partial_weight_examples():
    assert BitVec.from_bits([1, 1, 1, 0]).partial_weight(2, 4) == 2
    assert BitVec.from_bits([1, 1, 1, 1]).partial_weight(1, 4) == 4
    assert BitVec.from_bits([0, 1, 1, 1]).partial_weight(3, 4) == 2


def test_partial_weight_equals_weight_on_full_range():
    rng = random.Random(0)
    for _ in range(50):
        n = rng.randrange(1, 20)
        v = BitVec(n, rng.randrange(1 << n))
        assert v.partial_weight(1, n) == v.weight()
        # cross-check against bit-by-bit summation
        s, t = sorted((rng.randrange(1, n + 1), rng.randrange(1, n + 1)))
        assert v.partial_weight(s, t) == sum(v.bit(i) for i in range(s, t + 1))


def test_partial_weight_range_errors():
    v = BitVec.from_bits([1, 0, 1])
    with pytest.raises(IndexError):
        v.partial_weight(0, 2)
    with pytest.raises(IndexError):
        v.partial_weight(2, 4)


def test_order_key_examples():
    assert BitVec.from_bits([1, 1, 0, 0]).order_key() == 6
    assert BitVec.from_bits([0, 0, 0, 0]).order_key() == 0
    assert BitVec.from_bits([0, 1, 1, 0]).order_key() == 12


def test_order_key_injective_small_lengths():
    for n in range(1, 13):
        keys = {BitVec(n, m).order_key() for m in range(1 << n)}
        assert len(keys) == 1 << n


def test_xor_properties():
    rng = random.Random(1)
    for _ in range(100):
        n = rng.randrange(1, 16)
        a = BitVec(n, rng.randrange(1 << n))
        b = BitVec(n, rng.randrange(1 << n))
        c = BitVec(n, rng.randrange(1 << n))
        assert a ^ b == b ^ a
        assert (a ^ b) ^ c == a ^ (b ^ c)
        assert a ^ a == BitVec.zero(n)
        assert (a ^ b).weight() % 2 == (a.weight() + b.weight()) % 2


def test_string_round_trip():
    for bits in product((0, 1), repeat=5):
        v = BitVec.from_bits(bits)
        assert BitVec.from_string(str(v)) == v


def test_unit_and_ones():
    e = BitVec.ones(6)
    assert e.weight() == 6
    acc = BitVec.zero(6)
    for i in range(1, 7):
        acc = acc ^ BitVec.unit(6, i)
    assert acc == e


def test_length_mismatch_rejected():
    with pytest.raises(ValueError):
        BitVec.zero(3) ^ BitVec.zero(4)
