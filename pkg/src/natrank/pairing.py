"""Pairing and k-tupling bijections on naturals.

The pair codec grows exponentially in its first argument and linearly in
the second. The k-tupling distributes the bits of a number round-robin
over k components: expand in base 2**k, pad each digit to k bits,
transpose the resulting bit matrix, and read the rows back as numbers.
"""

from collections.abc import Sequence

from .natbits import (
    base_digits,
    bit_value,
    digits_value,
    max_bit_count,
    padded_bits,
    transpose,
)


def pepis_pair(x: int, y: int) -> int:
    """Encode (x, y) as 2**x * (2*y + 1) - 1."""
    if x < 0 or y < 0:
        raise ValueError(f"expected natural numbers, got ({x}, {y})")
    return (1 << x) * (2 * y + 1) - 1


def pepis_unpair(z: int) -> tuple[int, int]:
    """Invert pepis_pair: x is the 2-adic valuation of z + 1."""
    if z < 0:
        raise ValueError(f"expected a natural number, got {z}")
    m = z + 1
    x = (m & -m).bit_length() - 1  # trailing zero count via lowest set bit
    y = ((m >> x) - 1) >> 1
    return x, y


def tuple_decode(k: int, n: int) -> list[int]:
    """Split n into a k-tuple; component i collects every k-th bit from bit i."""
    if k < 1:
        raise ValueError(f"tuple arity must be >= 1, got {k}")
    rows = [padded_bits(k, d) for d in base_digits(1 << k, n)]
    return [bit_value(col) for col in transpose(rows)]


def tuple_encode(parts: Sequence[int]) -> int:
    """Merge a nonempty tuple back into a single number, k bits at a time."""
    if not parts:
        raise ValueError("cannot encode an empty tuple")
    width = max_bit_count(parts)
    rows = [padded_bits(width, p) for p in parts]
    digits = [bit_value(col) for col in transpose(rows)]
    return digits_value(1 << len(parts), digits)


def pair2(x: int, y: int) -> int:
    """Bit-interleaving pairing: the arity-2 instance of tuple_encode."""
    return tuple_encode([x, y])


def unpair2(z: int) -> tuple[int, int]:
    x, y = tuple_decode(2, z)
    return x, y
