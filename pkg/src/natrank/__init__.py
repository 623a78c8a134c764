"""Reversible encodings between arbitrary-precision naturals and
combinatorial objects: finite sets, finite functions, tuples,
permutations, and their hereditarily nested closures with urelements.
"""

from .codecs import (
    bits_to_rle,
    fun_to_nat,
    fun_to_set,
    ftuple_to_nat,
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
from .factoradic import fact_asc_value, fact_desc_value, to_fact_asc, to_fact_desc
from .hereditary import (
    CODEC_NAMES,
    Tree,
    hff_to_nat,
    hfp_to_nat,
    hfs_to_nat,
    is_canonical,
    json_to_tree,
    nat_to_hff,
    nat_to_hfp,
    nat_to_hfs,
    parse_tree,
    rank,
    render_tree,
    tree_to_json,
    unrank,
)
from .natbits import (
    base_digits,
    bit_count,
    bit_list,
    bit_value,
    digits_value,
    max_bit_count,
    padded_bits,
    transpose,
)
from .pairing import pair2, pepis_pair, pepis_unpair, tuple_decode, tuple_encode, unpair2
from .permcodec import (
    lehmer_decode,
    lehmer_encode,
    nat_to_perm,
    perm_rank,
    perm_to_nat,
    perm_unrank,
    sf,
    sf_split,
)

__version__ = "0.1.0"

__all__ = [
    "CODEC_NAMES",
    "Tree",
    "base_digits",
    "bit_count",
    "bit_list",
    "bit_value",
    "bits_to_rle",
    "digits_value",
    "fact_asc_value",
    "fact_desc_value",
    "ftuple_to_nat",
    "fun_to_nat",
    "fun_to_set",
    "hff_to_nat",
    "hfp_to_nat",
    "hfs_to_nat",
    "is_canonical",
    "is_canonical_ftuple",
    "json_to_tree",
    "lehmer_decode",
    "lehmer_encode",
    "max_bit_count",
    "nat_to_ftuple",
    "nat_to_fun",
    "nat_to_hff",
    "nat_to_hfp",
    "nat_to_hfs",
    "nat_to_perm",
    "nat_to_rle",
    "nat_to_set",
    "padded_bits",
    "pair2",
    "parse_tree",
    "pepis_pair",
    "pepis_unpair",
    "perm_rank",
    "perm_to_nat",
    "perm_unrank",
    "rank",
    "render_tree",
    "rle_to_bits",
    "rle_to_nat",
    "set_to_fun",
    "set_to_nat",
    "sf",
    "sf_split",
    "to_fact_asc",
    "to_fact_desc",
    "transpose",
    "tree_to_json",
    "tuple_decode",
    "tuple_encode",
    "unpair2",
    "unrank",
]
