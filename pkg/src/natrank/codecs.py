"""Flat bijections between naturals and finite sets or finite functions.

A finite set is a strictly increasing sequence of naturals; a finite
function is any finite sequence of naturals (its list of values). Three
function codecs are provided: the tuple route (length paired with merged
bits), the prefix-sum route through sets, and run-length coding of the
binary expansion.
"""

from collections.abc import Sequence
from itertools import groupby

from .natbits import bit_list, bit_value
from .pairing import pepis_pair, pepis_unpair, tuple_decode, tuple_encode


_BYTE_BITS = [tuple(i for i in range(8) if b >> i & 1) for b in range(256)]


def set_to_nat(elems: Sequence[int]) -> int:
    """Sum of 2**e over a strictly increasing sequence of naturals."""
    prev = -1
    for e in elems:
        if e <= prev:
            raise ValueError(f"set elements must be strictly increasing naturals, got {list(elems)}")
        prev = e
    if prev < 0:
        return 0
    # paint bits into a buffer: summing shifted ones would copy the total per element
    buf = bytearray(prev // 8 + 1)
    for e in elems:
        buf[e >> 3] |= 1 << (e & 7)
    return int.from_bytes(buf, "little")


def nat_to_set(n: int) -> list[int]:
    """Positions of the 1 bits of n, in increasing order."""
    if n < 0:
        raise ValueError(f"expected a natural number, got {n}")
    elems = []
    # scan by bytes: shifting n bit by bit would copy the whole number each step
    for k, byte in enumerate(n.to_bytes((n.bit_length() + 7) // 8, "little")):
        if byte:
            elems.extend(8 * k + i for i in _BYTE_BITS[byte])
    return elems


def fun_to_set(values: Sequence[int]) -> list[int]:
    """Prefix sums plus position, turning any value list strictly increasing."""
    if any(v < 0 for v in values):
        raise ValueError(f"function values must be naturals, got {list(values)}")
    elems = []
    total = 0
    for i, v in enumerate(values):
        total += v
        elems.append(total + i)
    return elems


def set_to_fun(elems: Sequence[int]) -> list[int]:
    """Gaps between consecutive elements minus one; inverse of fun_to_set."""
    values = []
    prev = -1
    for e in elems:
        if e <= prev:
            raise ValueError(f"set elements must be strictly increasing naturals, got {list(elems)}")
        values.append(e - prev - 1)
        prev = e
    return values


def nat_to_fun(n: int) -> list[int]:
    return set_to_fun(nat_to_set(n))


def fun_to_nat(values: Sequence[int]) -> int:
    return set_to_nat(fun_to_set(values))


def ftuple_to_nat(parts: Sequence[int]) -> int:
    """Pair the tuple's length with its merged bits; [] encodes to 0."""
    if not parts:
        return 0
    return pepis_pair(len(parts) - 1, tuple_encode(parts))


def nat_to_ftuple(n: int) -> list[int]:
    """Inverse of ftuple_to_nat; 0 decodes to the empty tuple.

    Because 0 is taken by the empty tuple, the singleton [0] is never
    produced: it shares code 0 with []. See is_canonical_ftuple.
    """
    if n < 0:
        raise ValueError(f"expected a natural number, got {n}")
    if n == 0:
        return []
    k, merged = pepis_unpair(n)
    return tuple_decode(k + 1, merged)


def is_canonical_ftuple(parts: Sequence[int]) -> bool:
    """True iff the tuple survives the round trip through its code."""
    parts = list(parts)
    return nat_to_ftuple(ftuple_to_nat(parts)) == parts


def bits_to_rle(bits: Sequence[int]) -> list[int]:
    """Run lengths of a canonical bit list, least-significant run first.

    Counts are stored off by one: a run of c+1 equal bits is stored as c.
    """
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"bits must be 0 or 1, got {list(bits)}")
    if bits and bits[-1] != 1:
        raise ValueError("bit list must end in a 1 bit (canonical form)")
    return [sum(1 for _ in group) - 1 for _, group in groupby(bits)]


def rle_to_bits(runs: Sequence[int]) -> list[int]:
    """Rebuild the bit list: the final run holds 1s, earlier runs alternate."""
    if any(c < 0 for c in runs):
        raise ValueError(f"run counts must be naturals, got {list(runs)}")
    m = len(runs)
    bits = []
    for i, c in enumerate(runs):
        bits.extend([(m - i) % 2] * (c + 1))
    return bits


def nat_to_rle(n: int) -> list[int]:
    """Run-length code of n's binary expansion; 0 has no runs at all."""
    if n < 0:
        raise ValueError(f"expected a natural number, got {n}")
    return [] if n == 0 else bits_to_rle(bit_list(n))


def rle_to_nat(runs: Sequence[int]) -> int:
    return bit_value(rle_to_bits(runs))
