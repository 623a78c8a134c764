import random

import pytest

from natrank import (
    base_digits,
    bit_count,
    bit_list,
    bit_value,
    digits_value,
    max_bit_count,
    padded_bits,
    transpose,
)


def digits_oracle(base, n):
    # independent repeated div/mod expansion
    if n == 0:
        return [0]
    out = []
    while n:
        out.append(n % base)
        n //= base
    return out


def horner_oracle(base, digits):
    return sum(d * base**i for i, d in enumerate(digits))


@pytest.mark.parametrize("base,n,expected", [
    (4, 42, [2, 2, 2]),
    (2, 0, [0]),
    (4, 5, [1, 1]),
])
def test_base_digits_golden(base, n, expected):
    assert base_digits(base, n) == expected


def test_base_digits_matches_divmod_oracle():
    rng = random.Random(1)
    cases = [(b, n) for b in (2, 3, 4, 10, 16) for n in range(300)]
    cases += [(rng.randrange(2, 40), rng.randrange(1 << 200)) for _ in range(50)]
    for base, n in cases:
        assert base_digits(base, n) == digits_oracle(base, n)


@pytest.mark.parametrize("base,digits,expected", [
    (4, [2, 2, 2], 42),
    (2, [], 0),
    (2, [0, 1], 2),
])
def test_digits_value_golden(base, digits, expected):
    assert digits_value(base, digits) == expected
    assert horner_oracle(base, digits) == expected


def test_digit_round_trips():
    for base in (2, 3, 7, 16):
        for n in range(500):
            assert digits_value(base, base_digits(base, n)) == n
    # canonical digit sequences round trip the other way
    rng = random.Random(2)
    for _ in range(200):
        base = rng.randrange(2, 12)
        k = rng.randrange(1, 12)
        ds = [rng.randrange(base) for _ in range(k - 1)] + [rng.randrange(1, base)]
        assert base_digits(base, digits_value(base, ds)) == ds


def test_base_digits_rejects_bad_input():
    with pytest.raises(ValueError):
        base_digits(1, 5)
    with pytest.raises(ValueError):
        base_digits(2, -1)
    with pytest.raises(ValueError):
        digits_value(2, [0, 2])
    with pytest.raises(ValueError):
        digits_value(2, [-1])


def test_bit_list_and_value():
    assert bit_list(2) == [0, 1]
    assert bit_list(1) == [1]
    assert bit_value([0, 1]) == 2
    assert bit_value([1, 0, 1, 0, 1]) == 21
    for n in range(1000):
        assert bit_value(bit_list(n)) == n


def test_bit_count_convention():
    def halving_oracle(n):
        count = 1
        while n > 1:
            n >>= 1
            count += 1
        return count

    assert bit_count(0) == 1
    assert bit_count(1) == 1
    assert bit_count(42) == 6
    for n in range(1000):
        assert bit_count(n) == halving_oracle(n)
        if n >= 1:
            assert bit_count(n) == len(base_digits(2, n))


def test_max_bit_count():
    assert max_bit_count([2, 1, 2]) == 2
    assert max_bit_count([0]) == 1
    assert max_bit_count([0, 0]) == 1
    with pytest.raises(ValueError):
        max_bit_count([])


def test_padded_bits():
    assert padded_bits(2, 2) == [0, 1]
    assert padded_bits(2, 1) == [1, 0]
    assert padded_bits(3, 0) == [0, 0, 0]
    for n in range(200):
        width = bit_count(n) + 3
        assert bit_value(padded_bits(width, n)) == n
        assert len(padded_bits(width, n)) == width
    with pytest.raises(ValueError):
        padded_bits(2, 8)


def test_transpose():
    assert transpose([[1, 0], [1, 0]]) == [[1, 1], [0, 0]]
    assert transpose([[0]]) == [[0]]
    assert transpose([[1], [0], [1], [0], [1]]) == [[1, 0, 1, 0, 1]]


def test_transpose_is_involution_and_swaps_indices():
    rng = random.Random(3)
    for _ in range(50):
        rows, cols = rng.randrange(1, 8), rng.randrange(1, 8)
        m = [[rng.randrange(2) for _ in range(cols)] for _ in range(rows)]
        t = transpose(m)
        assert len(t) == cols and all(len(row) == rows for row in t)
        for i in range(cols):
            for j in range(rows):
                assert t[i][j] == m[j][i]
        assert transpose(t) == m


def test_transpose_rejects_ragged():
    with pytest.raises(ValueError):
        transpose([[1, 0], [1]])
