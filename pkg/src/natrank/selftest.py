"""Built-in smoke suite: golden values plus bounded round-trip sweeps."""

import random
import sys
from itertools import permutations
from math import factorial

from . import codecs, factoradic, hereditary, pairing, permcodec

PAIR_TABLE_4X4 = [0, 2, 4, 6, 1, 5, 9, 13, 3, 11, 19, 27, 7, 23, 39, 55]

# nat_to_ftuple for 1..15
FTUPLE_TABLE = [
    [0, 0], [1], [0, 0, 0], [2], [1, 0], [3], [0, 0, 0, 0], [4],
    [0, 1], [5], [1, 0, 0], [6], [1, 1], [7], [0, 0, 0, 0, 0],
]

TREE_42 = {
    "fun": [[[]], [[]], [[]]],
    "ftuple": [[[[], [], []], []]],
    "rle": [[], [], [], [], [], []],
    "perm": [[], [[], [[]]], [[[]], []], [[]], [[], [[]], [[], [[]]]]],
}


def _expect(cond, detail):
    if not cond:
        raise AssertionError(detail)


def _check_pairing_golden():
    _expect(pairing.pepis_pair(1, 10) == 41, "pepis_pair(1,10) != 41")
    _expect(pairing.pepis_pair(10, 1) == 3071, "pepis_pair(10,1) != 3071")
    table = [pairing.pepis_pair(a, b) for a in range(4) for b in range(4)]
    _expect(table == PAIR_TABLE_4X4, f"4x4 pairing table mismatch: {table}")
    for z in range(2000):
        _expect(pairing.pepis_pair(*pairing.pepis_unpair(z)) == z, f"pepis round trip fails at {z}")


def _check_tupling():
    _expect(pairing.tuple_decode(3, 42) == [2, 1, 2], "tuple_decode(3,42) != [2,1,2]")
    _expect(pairing.tuple_encode([2, 1, 2]) == 42, "tuple_encode([2,1,2]) != 42")
    for k in range(1, 5):
        for n in range(200):
            _expect(
                pairing.tuple_encode(pairing.tuple_decode(k, n)) == n,
                f"tuple round trip fails at k={k}, n={n}",
            )
    _expect(pairing.unpair2(42) == (0, 7), "unpair2(42) != (0, 7)")


def _check_ftuple():
    _expect(codecs.ftuple_to_nat([1, 0, 2, 1, 3]) == 21295, "ftuple_to_nat golden mismatch")
    _expect(codecs.nat_to_ftuple(21295) == [1, 0, 2, 1, 3], "nat_to_ftuple golden mismatch")
    for i, t in enumerate(FTUPLE_TABLE, start=1):
        _expect(codecs.nat_to_ftuple(i) == t, f"nat_to_ftuple({i}) != {t}")
        _expect(codecs.ftuple_to_nat(t) == i, f"ftuple_to_nat({t}) != {i}")
    for n in range(500):
        _expect(
            codecs.ftuple_to_nat(codecs.nat_to_ftuple(n)) == n,
            f"ftuple round trip fails at {n}",
        )


def _check_set_and_fun():
    _expect(codecs.fun_to_set([1, 0, 2, 1, 2]) == [1, 2, 5, 7, 10], "fun_to_set golden mismatch")
    _expect(codecs.set_to_fun([1, 2, 5, 7, 10]) == [1, 0, 2, 1, 2], "set_to_fun golden mismatch")
    _expect(codecs.nat_to_fun(2008) == [3, 0, 1, 0, 0, 0, 0], "nat_to_fun(2008) mismatch")
    _expect(codecs.nat_to_fun(42) == [1, 1, 1], "nat_to_fun(42) mismatch")
    for n in range(500):
        _expect(codecs.set_to_nat(codecs.nat_to_set(n)) == n, f"set round trip fails at {n}")
        _expect(codecs.fun_to_nat(codecs.nat_to_fun(n)) == n, f"fun round trip fails at {n}")


def _check_rle():
    _expect(codecs.nat_to_rle(42) == [0] * 6, "nat_to_rle(42) mismatch")
    _expect(codecs.nat_to_rle(0) == [], "nat_to_rle(0) mismatch")
    _expect(codecs.nat_to_rle(3) == [1], "nat_to_rle(3) mismatch")
    for n in range(500):
        _expect(codecs.rle_to_nat(codecs.nat_to_rle(n)) == n, f"rle round trip fails at {n}")


def _check_factoradics():
    _expect(factoradic.to_fact_asc(42) == [0, 0, 0, 3, 1], "to_fact_asc(42) mismatch")
    _expect(factoradic.to_fact_desc(42) == [1, 3, 0, 0, 0], "to_fact_desc(42) mismatch")
    for n in range(500):
        _expect(factoradic.fact_asc_value(factoradic.to_fact_asc(n)) == n, f"asc round trip at {n}")
        _expect(factoradic.fact_desc_value(factoradic.to_fact_desc(n)) == n, f"desc round trip at {n}")


def _check_perm_golden():
    _expect(permcodec.perm_unrank(5, 42) == [1, 4, 0, 2, 3], "perm_unrank(5,42) mismatch")
    _expect(permcodec.perm_unrank(8, 2008) == [0, 3, 6, 5, 4, 7, 1, 2], "perm_unrank(8,2008) mismatch")
    _expect(permcodec.perm_rank([1, 4, 0, 2, 3]) == (5, 42), "perm_rank golden mismatch")
    _expect(permcodec.nat_to_perm(2008) == [1, 4, 3, 2, 0, 5, 6], "nat_to_perm(2008) mismatch")
    _expect(permcodec.nat_to_perm(0) == [], "nat_to_perm(0) mismatch")
    for n in range(500):
        _expect(permcodec.perm_to_nat(permcodec.nat_to_perm(n)) == n, f"perm round trip fails at {n}")


def _check_perm_blocks():
    for k in range(1, 6):
        block = [tuple(permcodec.nat_to_perm(n))
                 for n in range(permcodec.sf(k), permcodec.sf(k) + factorial(k))]
        _expect(len(set(block)) == len(block), f"repeated permutation in size-{k} block")
        _expect(set(block) == set(permutations(range(k))),
                f"size-{k} block is not exactly the size-{k} permutations")
    for n in range(20):
        _expect(permcodec.sf(n + 1) - permcodec.sf(n) == factorial(n),
                f"sf difference at {n} is not {n}!")


def _check_hereditary_golden():
    for codec, tree in TREE_42.items():
        _expect(hereditary.unrank(42, codec) == tree, f"decode of 42 under {codec} mismatch")
        _expect(hereditary.rank(tree, codec) == 42, f"encode of the {codec} tree of 42 mismatch")
    _expect(
        hereditary.unrank(1234567890, "fun", ulimit=10) == [3, 2, 0, 1, 7, 0, 1, 2, 0, 2, 2],
        "decode of 1234567890 with urelement limit 10 mismatch",
    )


def _check_hereditary_round_trips():
    for codec in hereditary.CODEC_NAMES:
        for ulimit in (0, 4, 10):
            for n in range(200):
                _expect(
                    hereditary.rank(hereditary.unrank(n, codec, ulimit), codec, ulimit) == n,
                    f"hereditary round trip fails for codec={codec}, ulimit={ulimit}, n={n}",
                )


def _check_part_bounds():
    rng = random.Random(0x5EED)
    samples = list(range(1, 500)) + [rng.randrange(1, 1 << 64) for _ in range(50)]
    for name in hereditary.CODEC_NAMES:
        decode = {"set": codecs.nat_to_set, "fun": codecs.nat_to_fun,
                  "ftuple": codecs.nat_to_ftuple, "rle": codecs.nat_to_rle,
                  "perm": permcodec.nat_to_perm}[name]
        for n in samples:
            _expect(all(part < n for part in decode(n)),
                    f"codec {name} produced a part >= {n}")


def _check_canonicity_edges():
    _expect(codecs.ftuple_to_nat([]) == 0, "ftuple_to_nat([]) != 0")
    _expect(codecs.ftuple_to_nat([0]) == 0, "ftuple_to_nat([0]) != 0")
    _expect(not codecs.is_canonical_ftuple([0]), "[0] wrongly reported canonical")
    _expect(not hereditary.is_canonical([[]], "ftuple"), "[[]] wrongly canonical under ftuple")
    for bad in ([2, 1], [1, 1]):
        try:
            codecs.set_to_nat(bad)
        except ValueError:
            pass
        else:
            raise AssertionError(f"set_to_nat({bad}) did not reject non-canonical input")


CHECKS = [
    ("pairing golden values", _check_pairing_golden),
    ("tupling golden values and round trips", _check_tupling),
    ("ftuple codec table and round trips", _check_ftuple),
    ("set and fun codecs", _check_set_and_fun),
    ("run-length codec", _check_rle),
    ("factoradics", _check_factoradics),
    ("permutation golden values and round trips", _check_perm_golden),
    ("permutation block partition", _check_perm_blocks),
    ("hereditary golden values", _check_hereditary_golden),
    ("hereditary round trips", _check_hereditary_round_trips),
    ("decode part bounds", _check_part_bounds),
    ("canonicity edges", _check_canonicity_edges),
]


def run(stream=None) -> int:
    """Run every check, print one line each plus a summary; 0 iff all pass."""
    stream = sys.stdout if stream is None else stream
    failed = 0
    for name, check in CHECKS:
        try:
            check()
        except Exception as exc:
            failed += 1
            print(f"FAIL {name}: {exc}", file=stream)
        else:
            print(f"ok   {name}", file=stream)
    print(f"{len(CHECKS) - failed} of {len(CHECKS)} checks passed", file=stream)
    return 1 if failed else 0
