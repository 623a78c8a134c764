import random

import pytest

from natrank import (
    bit_list,
    bits_to_rle,
    ftuple_to_nat,
    fun_to_nat,
    fun_to_set,
    is_canonical_ftuple,
    nat_to_ftuple,
    nat_to_fun,
    nat_to_rle,
    nat_to_set,
    rle_to_bits,
    rle_to_nat,
    set_to_fun,
    set_to_nat,
)

# nat_to_ftuple for 1..15
FTUPLE_TABLE = [
    [0, 0], [1], [0, 0, 0], [2], [1, 0], [3], [0, 0, 0, 0], [4],
    [0, 1], [5], [1, 0, 0], [6], [1, 1], [7], [0, 0, 0, 0, 0],
]


def power_sum_oracle(elems):
    return sum(2**e for e in elems)


def run_scan_oracle(bits):
    runs = []
    i = 0
    while i < len(bits):
        j = i
        while j + 1 < len(bits) and bits[j + 1] == bits[i]:
            j += 1
        runs.append(j - i)
        i = j + 1
    return runs


def test_set_to_nat():
    assert set_to_nat([1, 3, 5]) == 42 == power_sum_oracle([1, 3, 5])
    assert set_to_nat([]) == 0
    assert set_to_nat([0]) == 1


def test_set_to_nat_rejects_non_canonical():
    with pytest.raises(ValueError):
        set_to_nat([2, 1])
    with pytest.raises(ValueError):
        set_to_nat([1, 1])
    with pytest.raises(ValueError):
        set_to_nat([-1, 0])


def test_nat_to_set():
    assert nat_to_set(42) == [1, 3, 5]
    assert nat_to_set(0) == []
    assert set_to_nat(nat_to_set(2008)) == 2008
    for n in range(2000):
        elems = nat_to_set(n)
        assert all(a < b for a, b in zip(elems, elems[1:]))
        assert power_sum_oracle(elems) == n


def test_fun_set_golden():
    assert fun_to_set([1, 0, 2, 1, 2]) == [1, 2, 5, 7, 10]
    assert set_to_fun([1, 2, 5, 7, 10]) == [1, 0, 2, 1, 2]
    assert fun_to_set([]) == []
    assert set_to_fun([]) == []
    assert fun_to_set([0, 0, 0]) == [0, 1, 2]
    assert set_to_fun([1, 3, 5]) == [1, 1, 1]


def test_fun_to_set_matches_prefix_sum_oracle():
    rng = random.Random(6)
    for _ in range(200):
        values = [rng.randrange(8) for _ in range(rng.randrange(10))]
        expected = [sum(values[: i + 1]) + i for i in range(len(values))]
        got = fun_to_set(values)
        assert got == expected
        assert all(a < b for a, b in zip(got, got[1:]))
        assert set_to_fun(got) == values


def test_set_to_fun_rejects_non_canonical():
    with pytest.raises(ValueError):
        set_to_fun([2, 2])
    with pytest.raises(ValueError):
        set_to_fun([3, 1])


def test_nat_fun_round_trips():
    assert nat_to_fun(2008) == [3, 0, 1, 0, 0, 0, 0]
    assert nat_to_fun(0) == []
    assert nat_to_fun(42) == [1, 1, 1]
    for n in range(3000):
        assert fun_to_nat(nat_to_fun(n)) == n
    rng = random.Random(7)
    for _ in range(100):
        values = [rng.randrange(1 << 14) for _ in range(rng.randrange(12))]
        assert nat_to_fun(fun_to_nat(values)) == values


def test_ftuple_golden():
    assert ftuple_to_nat([1, 0, 2, 1, 3]) == 21295
    assert nat_to_ftuple(21295) == [1, 0, 2, 1, 3]
    assert ftuple_to_nat([]) == 0
    assert ftuple_to_nat([1, 0]) == 5
    assert nat_to_ftuple(9) == [0, 1]
    assert nat_to_ftuple(0) == []
    for i, t in enumerate(FTUPLE_TABLE, start=1):
        assert nat_to_ftuple(i) == t
        assert ftuple_to_nat(t) == i


def test_ftuple_round_trips():
    for n in range(3000):
        assert ftuple_to_nat(nat_to_ftuple(n)) == n
    rng = random.Random(8)
    for _ in range(100):
        parts = [rng.randrange(1 << 16) for _ in range(rng.randrange(1, 8))]
        if parts == [0]:
            continue
        assert nat_to_ftuple(ftuple_to_nat(parts)) == parts


def test_ftuple_zero_collision_is_pinned():
    # [] and [0] share code 0; only [] is in the decode image
    assert ftuple_to_nat([0]) == 0 == ftuple_to_nat([])
    assert is_canonical_ftuple([]) is True
    assert is_canonical_ftuple([0]) is False
    assert is_canonical_ftuple([1, 0]) is True


def test_bits_to_rle():
    assert bits_to_rle([0, 1, 0, 1, 0, 1]) == [0, 0, 0, 0, 0, 0]
    assert bits_to_rle([]) == []
    assert bits_to_rle([1, 1]) == [1]


def test_rle_matches_run_scan_oracle():
    for n in range(1, 2000):
        bits = bit_list(n)
        assert bits_to_rle(bits) == run_scan_oracle(bits)


def test_rle_to_bits_alternates_and_ends_high():
    rng = random.Random(9)
    for _ in range(300):
        runs = [rng.randrange(4) for _ in range(rng.randrange(1, 10))]
        bits = rle_to_bits(runs)
        assert bits[-1] == 1
        assert bits_to_rle(bits) == runs
    assert rle_to_bits([]) == []


def test_nat_rle_round_trips():
    assert nat_to_rle(42) == [0, 0, 0, 0, 0, 0]
    assert nat_to_rle(0) == []
    assert nat_to_rle(3) == [1]
    assert rle_to_nat([]) == 0
    for n in range(3000):
        assert rle_to_nat(nat_to_rle(n)) == n


def test_rle_rejects_bad_input():
    with pytest.raises(ValueError):
        bits_to_rle([1, 0])  # not canonical: ends in 0
    with pytest.raises(ValueError):
        bits_to_rle([1, 2])
    with pytest.raises(ValueError):
        rle_to_bits([1, -1])
