"""Permutation ranking via Lehmer codes, and the bijection with all of Nat.

A permutation of size n is a list containing exactly 0..n-1. Within one
size, ranks follow lexicographic order of the permutations. Sizes are
then chained: all size-k permutations occupy the code block
[sf(k), sf(k) + k! - 1], with 0 reserved for the empty permutation.
"""

from collections.abc import Sequence
from math import factorial

from .factoradic import fact_desc_value, to_fact_desc


def _validate_perm(perm: Sequence[int]) -> None:
    seen = [False] * len(perm)
    for e in perm:
        if not 0 <= e < len(perm) or seen[e]:
            raise ValueError(f"not a permutation of 0..{len(perm) - 1}: {list(perm)}")
        seen[e] = True


def lehmer_encode(perm: Sequence[int]) -> list[int]:
    """Record each element's index in the shrinking pool of unused values."""
    _validate_perm(perm)
    pool = list(range(len(perm)))
    code = []
    for e in perm:
        k = pool.index(e)
        code.append(k)
        pool.pop(k)
    return code


def lehmer_decode(code: Sequence[int]) -> list[int]:
    """Pick the code[i]-th remaining value of 0..n-1 at each step."""
    pool = list(range(len(code)))
    perm = []
    for k in code:
        if not 0 <= k < len(pool):
            raise ValueError(f"Lehmer digit {k} out of range with {len(pool)} values left")
        perm.append(pool.pop(k))
    return perm


def perm_rank(perm: Sequence[int]) -> tuple[int, int]:
    """Size of a nonempty permutation and its rank (< size!) within that size."""
    if not perm:
        raise ValueError("perm_rank needs a nonempty permutation")
    return len(perm), fact_desc_value(lehmer_encode(perm))


def perm_unrank(size: int, rank: int) -> list[int]:
    """The rank-th permutation of 0..size-1 in lexicographic order."""
    if size < 0 or rank < 0:
        raise ValueError(f"expected naturals, got size {size}, rank {rank}")
    if rank >= factorial(size):
        raise ValueError(f"rank {rank} out of range for size {size} (max {factorial(size) - 1})")
    if size == 0:
        return []
    digits = to_fact_desc(rank)
    return lehmer_decode([0] * (size - len(digits)) + digits)


def sf(n: int) -> int:
    """Sum of k! for k < n: where the block of size-n permutations starts."""
    if n < 0:
        raise ValueError(f"expected a natural number, got {n}")
    total, fact = 0, 1
    for k in range(n):
        if k:
            fact *= k
        total += fact
    return total


def sf_split(n: int) -> tuple[int, int]:
    """Decompose n >= 1 as (k, r) with sf(k) <= n < sf(k+1), r = n - sf(k)."""
    if n < 1:
        raise ValueError(f"sf_split is defined for n >= 1, got {n}")
    k, start, fact = 1, 1, 1
    while start + fact <= n:  # start = sf(k), fact = k!
        start += fact
        k += 1
        fact *= k
    return k, n - start


def nat_to_perm(n: int) -> list[int]:
    """Decode n into a permutation; 0 is the empty one, sizes grow by block."""
    if n < 0:
        raise ValueError(f"expected a natural number, got {n}")
    if n == 0:
        return []
    size, rank = sf_split(n)
    return perm_unrank(size, rank)


def perm_to_nat(perm: Sequence[int]) -> int:
    """Inverse of nat_to_perm: the block start for the size, plus the rank."""
    if not perm:
        return 0
    size, rank = perm_rank(perm)
    return sf(size) + rank
