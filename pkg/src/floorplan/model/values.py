"""Layout value trees.

A tree is ``B0`` (zero bytes), ``B1`` (one byte), a pair ``T l r`` or a
labelled node ``N "label" c``. Hashes and leaf counts are computed once at
construction so that large sets of trees stay cheap to build.
"""

from __future__ import annotations

import json
import re
from typing import Iterator


class ValueTree:
    __slots__ = ("_hash", "leaves")

    def __eq__(self, other):
        return _tree_eq(self, other)

    def __hash__(self):
        return self._hash

    def __repr__(self) -> str:
        return to_text(self)


class Leaf(ValueTree):
    __slots__ = ("bit",)

    def __init__(self, bit: int):
        self.bit = bit
        self.leaves = bit
        self._hash = hash(("B", bit))


B0 = Leaf(0)
B1 = Leaf(1)
Byte0, Byte1 = B0, B1


class Pair(ValueTree):
    __slots__ = ("left", "right")

    def __init__(self, left: ValueTree, right: ValueTree):
        self.left = left
        self.right = right
        self.leaves = left.leaves + right.leaves
        self._hash = hash(("T", left._hash, right._hash))


class Node(ValueTree):
    __slots__ = ("label", "child")

    def __init__(self, label: str, child: ValueTree):
        self.label = label
        self.child = child
        self.leaves = child.leaves
        self._hash = hash(("N", label, child._hash))


def _tree_eq(a, b) -> bool:
    # iterative so that long byte chains do not exhaust the call stack
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if x is y:
            continue
        if type(x) is not type(y) or x._hash != y._hash:
            return False
        if isinstance(x, Leaf):
            if x.bit != y.bit:
                return False
        elif isinstance(x, Pair):
            stack.append((x.right, y.right))
            stack.append((x.left, y.left))
        else:
            if x.label != y.label:
                return False
            stack.append((x.child, y.child))
    return True


def leaves(t: ValueTree) -> int:
    return t.leaves


def byte_chain(n: int) -> ValueTree:
    """The unique tree of ``Prim n``: ``T B1 (T B1 ... (T B1 B0))``."""
    t: ValueTree = B0
    for _ in range(n):
        t = Pair(B1, t)
    return t


# --- text form ---------------------------------------------------------------

def to_text(t: ValueTree) -> str:
    out: list[str] = []
    # explicit work stack: strings are emitted, trees are expanded
    stack: list = [(t, False)]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        node, nested = item
        if isinstance(node, Leaf):
            out.append("B1" if node.bit else "B0")
            continue
        parts: list = ["(" if nested else ""]
        if isinstance(node, Pair):
            parts += ["T ", (node.left, True), " ", (node.right, True)]
        else:
            parts += ["N ", json.dumps(node.label), " ", (node.child, True)]
        parts.append(")" if nested else "")
        stack.extend(reversed(parts))
    return "".join(out)


_TOKEN = re.compile(r'\s*(?:(\()|(\))|(B0|B1|T|N)(?![A-Za-z0-9_])|("(?:[^"\\]|\\.)*"))')


def _tokens(text: str) -> Iterator[tuple[str, str]]:
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad tree text at offset {pos}: {text[pos:pos + 10]!r}")
        pos = m.end()
        if m.group(1):
            yield "(", "("
        elif m.group(2):
            yield ")", ")"
        elif m.group(3):
            yield m.group(3), m.group(3)
        else:
            yield "str", json.loads(m.group(4))


def parse_tree(text: str) -> ValueTree:
    """Inverse of :func:`to_text`; whitespace between tokens is free."""
    toks = list(_tokens(text))
    i = 0

    def atom() -> ValueTree:
        nonlocal i
        kind, val = toks[i]
        if kind == "(":
            i += 1
            t = compound()
            if i >= len(toks) or toks[i][0] != ")":
                raise ValueError("expected ')'")
            i += 1
            return t
        if kind in ("B0", "B1"):
            i += 1
            return B1 if kind == "B1" else B0
        raise ValueError(f"unexpected {val!r}")

    def compound() -> ValueTree:
        nonlocal i
        if i >= len(toks):
            raise ValueError("unexpected end of tree text")
        kind, _ = toks[i]
        if kind == "T":
            i += 1
            left = atom()
            return Pair(left, atom())
        if kind == "N":
            i += 1
            if i >= len(toks) or toks[i][0] != "str":
                raise ValueError("expected a quoted label after N")
            label = toks[i][1]
            i += 1
            return Node(label, atom())
        return atom()

    tree = compound()
    if i != len(toks):
        raise ValueError("trailing tokens after tree")
    return tree


def normalize_ws(text: str) -> str:
    """Collapse whitespace runs and drop spaces next to parentheses."""
    text = re.sub(r"\s+", " ", text.strip())
    return re.sub(r"\(\s+", "(", re.sub(r"\s+\)", ")", text))


def flatten(t: ValueTree) -> tuple:
    """In-order sequence of bytes and node boundaries; insensitive to how
    pair spines are bracketed."""
    out: list = []
    stack: list = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, tuple):
            out.append(node)
        elif isinstance(node, Leaf):
            if node.bit:
                out.append(1)
        elif isinstance(node, Pair):
            stack += [node.right, node.left]
        else:
            stack += [(">", node.label), node.child, ("<", node.label)]
    return tuple(out)
