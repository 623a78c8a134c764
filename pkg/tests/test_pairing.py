import random

import pytest

from natrank import pair2, pepis_pair, pepis_unpair, tuple_decode, tuple_encode, unpair2

PAIR_TABLE_4X4 = [0, 2, 4, 6, 1, 5, 9, 13, 3, 11, 19, 27, 7, 23, 39, 55]


def valuation_oracle(m):
    # trial division by 2
    x = 0
    while m % 2 == 0:
        m //= 2
        x += 1
    return x, m


def interleave_oracle(x, y):
    # x on even bit positions, y on odd ones
    z = 0
    i = 0
    while x or y:
        z |= (x & 1) << (2 * i)
        z |= (y & 1) << (2 * i + 1)
        x >>= 1
        y >>= 1
        i += 1
    return z


def test_pepis_pair_golden():
    assert pepis_pair(1, 10) == 41
    assert pepis_pair(10, 1) == 3071
    assert pepis_pair(0, 0) == 0
    table = [pepis_pair(a, b) for a in range(4) for b in range(4)]
    assert table == PAIR_TABLE_4X4


def test_pepis_unpair_golden():
    assert pepis_unpair(41) == (1, 10)
    assert pepis_unpair(0) == (0, 0)
    x, odd = valuation_oracle(2009)
    assert pepis_unpair(2008) == (x, (odd - 1) // 2)
    assert 2 ** x * (2 * pepis_unpair(2008)[1] + 1) == 2009


def test_pepis_round_trips():
    for z in range(3000):
        x, y = pepis_unpair(z)
        assert pepis_pair(x, y) == z
    for x in range(30):
        for y in range(30):
            assert pepis_unpair(pepis_pair(x, y)) == (x, y)
    rng = random.Random(4)
    for _ in range(100):
        z = rng.randrange(1 << 128)
        assert pepis_pair(*pepis_unpair(z)) == z


def test_tuple_decode_golden():
    assert tuple_decode(3, 42) == [2, 1, 2]
    assert tuple_decode(2, 0) == [0, 0]
    assert tuple_decode(1, 21) == [21]


def test_tuple_encode_golden():
    assert tuple_encode([2, 1, 2]) == 42
    assert tuple_encode([0, 0]) == 0
    assert tuple_encode([1, 0]) == 1


def test_tuple_round_trips():
    for k in range(1, 7):
        for n in range(600):
            parts = tuple_decode(k, n)
            assert len(parts) == k
            assert tuple_encode(parts) == n
    rng = random.Random(5)
    for _ in range(300):
        k = rng.randrange(1, 7)
        parts = [rng.randrange(1 << 32) for _ in range(k)]
        assert tuple_decode(k, tuple_encode(parts)) == parts


def test_tuple_decode_part_bounds():
    for k in range(1, 6):
        assert tuple_decode(k, 0) == [0] * k
        for n in range(300):
            assert all(part <= n for part in tuple_decode(k, n))


def test_pair2_is_bit_interleaving():
    assert unpair2(42) == (0, 7)
    assert pair2(0, 7) == 42
    assert pair2(0, 0) == 0
    for x in range(25):
        for y in range(25):
            assert pair2(x, y) == interleave_oracle(x, y)
            assert unpair2(pair2(x, y)) == (x, y)
    for z in range(500):
        assert pair2(*unpair2(z)) == z


def test_tuple_errors():
    with pytest.raises(ValueError):
        tuple_decode(0, 5)
    with pytest.raises(ValueError):
        tuple_encode([])
    with pytest.raises(ValueError):
        tuple_encode([1, -2])
