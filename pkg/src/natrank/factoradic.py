"""Factorial-base digit sequences, in both significance orders."""

from collections.abc import Sequence


def to_fact_asc(n: int) -> list[int]:
    """Factoradic digits of n, least significant first; digit i weighs i!.

    The first digit is always 0 (its place value is 0! with no headroom),
    and digit i never exceeds i.
    """
    if n < 0:
        raise ValueError(f"expected a natural number, got {n}")
    if n == 0:
        return [0]
    digits = []
    j = 1
    while n:
        n, d = divmod(n, j)
        digits.append(d)
        j += 1
    return digits


def to_fact_desc(n: int) -> list[int]:
    """Factoradic digits of n, most significant first."""
    return to_fact_asc(n)[::-1]


def fact_desc_value(digits: Sequence[int]) -> int:
    """Value of most-significant-first factoradic digits.

    Leading zeros are allowed (padding never changes the value). The digit
    at distance j from the end must not exceed j, which forces the final
    digit to be 0.
    """
    if not digits:
        raise ValueError("empty factoradic digit sequence")
    total = 0
    weight = 1
    for j, d in enumerate(reversed(digits)):
        if j:
            weight *= j
        if not 0 <= d <= j:
            raise ValueError(f"factoradic digit {d} out of range at distance {j} from the end")
        total += d * weight
    return total


def fact_asc_value(digits: Sequence[int]) -> int:
    """Value of least-significant-first factoradic digits (first digit 0)."""
    return fact_desc_value(list(reversed(digits)))
