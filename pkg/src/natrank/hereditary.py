"""Hereditary (recursively nested) codecs over multiway trees.

A tree is either an atom, an int below the urelement limit, or a list of
subtrees. With the default limit of 0 there are no atoms and every leaf
is the empty list. Decoding a number n >= ulimit applies a flat codec to
n - ulimit and decodes each part into a child; numbers below the limit
stay atoms. Encoding folds back the other way. Every flat codec here
produces parts strictly smaller than its input, which is what makes the
recursion bottom out.

Five codecs are available, by name:

    set     strictly increasing bit positions (powers-of-two set sum)
    fun     finite function via prefix sums through the set codec
    ftuple  finite function via length-paired bit merging
    rle     run lengths of the binary expansion
    perm    the global permutation bijection

Tree text form (shared with the CLI): a node prints as [child,child,...]
and an atom as its decimal value, e.g. [[],[[]]] or [3,2,0]. parse_tree
accepts everything render_tree emits, plus optional whitespace. The JSON
form maps atoms to numbers and nodes to arrays.
"""

import json

from . import codecs, permcodec

Tree = int | list

_CODECS = {
    "set": (codecs.nat_to_set, codecs.set_to_nat),
    "fun": (codecs.nat_to_fun, codecs.fun_to_nat),
    "ftuple": (codecs.nat_to_ftuple, codecs.ftuple_to_nat),
    "rle": (codecs.nat_to_rle, codecs.rle_to_nat),
    "perm": (permcodec.nat_to_perm, permcodec.perm_to_nat),
}

CODEC_NAMES = tuple(_CODECS)


def _codec(name: str):
    try:
        return _CODECS[name]
    except KeyError:
        raise ValueError(f"unknown codec {name!r}; choose from {', '.join(_CODECS)}") from None


def unrank(n: int, codec: str = "set", ulimit: int = 0) -> Tree:
    """Decode n into a tree: an atom below ulimit, nested parts above it."""
    decode, _ = _codec(codec)
    if ulimit < 0:
        raise ValueError(f"urelement limit must be a natural number, got {ulimit}")
    if n < 0:
        raise ValueError(f"expected a natural number, got {n}")
    if n < ulimit:
        return n
    root: list = []
    # explicit stack: decoded trees can nest far beyond the recursion limit
    stack = [(root, iter(decode(n - ulimit)))]
    while stack:
        children, parts = stack[-1]
        for part in parts:
            if part < ulimit:
                children.append(part)
            else:
                node: list = []
                children.append(node)
                stack.append((node, iter(decode(part - ulimit))))
                break
        else:
            stack.pop()
    return root


def rank(tree: Tree, codec: str = "set", ulimit: int = 0) -> int:
    """Encode a tree back to its code; inverse of unrank on canonical trees."""
    _, encode = _codec(codec)
    if ulimit < 0:
        raise ValueError(f"urelement limit must be a natural number, got {ulimit}")
    if isinstance(tree, int):
        return _atom_code(tree, ulimit)
    if not isinstance(tree, list):
        raise TypeError(f"a tree is an int atom or a list of subtrees, got {type(tree).__name__}")
    stack: list[tuple] = [(iter(tree), [])]
    while True:
        children, child_codes = stack[-1]
        for child in children:
            if isinstance(child, int):
                child_codes.append(_atom_code(child, ulimit))
            elif isinstance(child, list):
                stack.append((iter(child), []))
                break
            else:
                raise TypeError(
                    f"a tree is an int atom or a list of subtrees, got {type(child).__name__}"
                )
        else:
            stack.pop()
            code = encode(child_codes) + ulimit
            if not stack:
                return code
            stack[-1][1].append(code)


def _atom_code(value: int, ulimit: int) -> int:
    if not 0 <= value < ulimit:
        if ulimit == 0:
            raise ValueError(f"atom {value} not allowed: the urelement limit is 0")
        raise ValueError(f"atom {value} outside urelement range [0..{ulimit - 1}]")
    return value


def is_canonical(tree: Tree, codec: str = "set", ulimit: int = 0) -> bool:
    """True iff the tree is in the decode image, i.e. rank/unrank returns it.

    Atoms out of urelement range still raise; layouts the encoder rejects
    (an unsorted set node, a non-permutation node) just report False.
    """
    _check_atom_range(tree, ulimit)
    try:
        code = rank(tree, codec, ulimit)
    except ValueError:
        return False
    return unrank(code, codec, ulimit) == tree


def _check_atom_range(tree: Tree, ulimit: int) -> None:
    stack = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, int):
            _atom_code(node, ulimit)
        elif isinstance(node, list):
            stack.extend(node)
        else:
            raise TypeError(f"a tree is an int atom or a list of subtrees, got {type(node).__name__}")


def nat_to_hfs(n: int, ulimit: int = 0) -> Tree:
    """Hereditarily finite set of n."""
    return unrank(n, "set", ulimit)


def hfs_to_nat(tree: Tree, ulimit: int = 0) -> int:
    return rank(tree, "set", ulimit)


def nat_to_hff(n: int, ulimit: int = 0) -> Tree:
    """Hereditarily finite function of n (prefix-sum codec)."""
    return unrank(n, "fun", ulimit)


def hff_to_nat(tree: Tree, ulimit: int = 0) -> int:
    return rank(tree, "fun", ulimit)


def nat_to_hfp(n: int, ulimit: int = 0) -> Tree:
    """Hereditarily finite permutation of n."""
    return unrank(n, "perm", ulimit)


def hfp_to_nat(tree: Tree, ulimit: int = 0) -> int:
    return rank(tree, "perm", ulimit)


def render_tree(tree: Tree) -> str:
    """Bracket text for a tree: no whitespace, atoms in decimal."""
    out: list[str] = []
    stack: list = [tree]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
        elif isinstance(item, int):
            out.append(str(item))
        elif isinstance(item, list):
            out.append("[")
            parts: list = []
            for i, child in enumerate(item):
                if i:
                    parts.append(",")
                parts.append(child)
            parts.append("]")
            stack.extend(reversed(parts))
        else:
            raise TypeError(f"a tree is an int atom or a list of subtrees, got {type(item).__name__}")
    return "".join(out)


def parse_tree(text: str) -> Tree:
    """Parse bracket text back into a tree; inverse of render_tree."""
    pos, end = 0, len(text)
    stack: list[list] = []
    result: Tree = None
    have_result = False
    need_value = True

    def complete(value: Tree) -> None:
        nonlocal result, have_result, need_value
        if stack:
            stack[-1].append(value)
        else:
            result, have_result = value, True
        need_value = False

    while pos < end:
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch == "[":
            if not need_value:
                raise ValueError(f"unexpected '[' at offset {pos}")
            stack.append([])
            pos += 1
        elif ch == "]":
            if not stack:
                raise ValueError(f"unmatched ']' at offset {pos}")
            if need_value and stack[-1]:
                raise ValueError(f"missing value before ']' at offset {pos}")
            complete(stack.pop())
            pos += 1
        elif ch == ",":
            if need_value or not stack:
                raise ValueError(f"unexpected ',' at offset {pos}")
            need_value = True
            pos += 1
        elif ch.isdigit():
            if not need_value:
                raise ValueError(f"unexpected number at offset {pos}")
            start = pos
            while pos < end and text[pos].isdigit():
                pos += 1
            complete(int(text[start:pos]))
        else:
            raise ValueError(f"unexpected character {ch!r} at offset {pos}")
    if stack:
        raise ValueError("unclosed '[' in tree text")
    if not have_result:
        raise ValueError("empty tree text")
    return result


def tree_to_json(tree: Tree) -> str:
    """JSON text for a tree: atoms become numbers, nodes become arrays."""
    return json.dumps(tree, separators=(",", ":"))


def json_to_tree(text: str) -> Tree:
    """Parse the JSON tree form; accepts exactly naturals and arrays."""
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON tree: {exc}") from None
    stack = [value]
    while stack:
        node = stack.pop()
        if isinstance(node, list):
            stack.extend(node)
        elif isinstance(node, bool) or not isinstance(node, int) or node < 0:
            raise ValueError(f"JSON trees contain only naturals and arrays, got {node!r}")
    return value
