"""Digit and bit plumbing for arbitrary-precision naturals.

All digit and bit sequences here are least-significant-first: position i
holds the coefficient of base**i. Most-significant-first display is a
front-end concern, not handled here.
"""

from collections.abc import Sequence


def base_digits(base: int, n: int) -> list[int]:
    """Digits of n in the given base, least significant first; [0] for n = 0."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if n < 0:
        raise ValueError(f"expected a natural number, got {n}")
    if n == 0:
        return [0]
    digits = []
    while n:
        n, d = divmod(n, base)
        digits.append(d)
    return digits


def digits_value(base: int, digits: Sequence[int]) -> int:
    """Evaluate least-significant-first digits back to a number."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    total = 0
    for d in reversed(digits):
        if not 0 <= d < base:
            raise ValueError(f"digit {d} out of range for base {base}")
        total = total * base + d
    return total


def bit_list(n: int) -> list[int]:
    """Binary digits of n, least significant first; [0] for n = 0."""
    return base_digits(2, n)


def bit_value(bits: Sequence[int]) -> int:
    return digits_value(2, bits)


def bit_count(n: int) -> int:
    """Width of n in binary digits; zero counts as one digit wide.

    The zero convention matters: tuple merging pads every component to a
    common width and an all-zero component must still occupy a column.
    """
    if n < 0:
        raise ValueError(f"expected a natural number, got {n}")
    return max(n.bit_length(), 1)


def max_bit_count(ns: Sequence[int]) -> int:
    """Largest bit_count across a nonempty sequence."""
    if not ns:
        raise ValueError("max_bit_count of an empty sequence")
    return max(bit_count(n) for n in ns)


def padded_bits(width: int, n: int) -> list[int]:
    """bit_list(n) zero-padded at the most-significant end to exactly width."""
    bits = bit_list(n)
    if len(bits) > width:
        raise ValueError(f"{n} does not fit in {width} bits")
    return bits + [0] * (width - len(bits))


def transpose(rows: list[list[int]]) -> list[list[int]]:
    """Transpose a rectangular matrix given as a list of rows."""
    if not rows:
        return []
    width = len(rows[0])
    if any(len(row) != width for row in rows[1:]):
        raise ValueError("cannot transpose a ragged matrix")
    return [list(col) for col in zip(*rows)]
