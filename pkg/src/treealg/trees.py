"""Canonical non-planar rooted trees and forests.

A tree is written in bracket notation, ``tree := "[" tree* "]"``; a forest
is ``"1"`` (the empty forest) or a space-separated product of trees.
Children and forest components are kept sorted by their bracket encoding,
so structural equality coincides with encoding equality.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator


class ForestSyntaxError(ValueError):
    """Bracket-grammar violation, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _tree_key(t: "Tree") -> tuple[int, str]:
    # total order on trees: degree first, then encoding; puts the leaf
    # before any larger tree, matching the canonical printed forms
    return (t.degree, t.encoding)


class Tree:
    """An unordered rooted tree, interned by canonical encoding.

    Instances are immutable and shared: building the same tree twice yields
    the identical object, so identity comparison and hashing are cheap.
    Interning never changes observable behaviour.
    """

    __slots__ = ("children", "encoding", "degree")

    _pool: dict[str, "Tree"] = {}

    def __new__(cls, children: Iterable["Tree"] = ()) -> "Tree":
        kids = tuple(sorted(children, key=_tree_key))
        encoding = "[" + "".join(k.encoding for k in kids) + "]"
        cached = cls._pool.get(encoding)
        if cached is not None:
            return cached
        self = object.__new__(cls)
        self.children = kids
        self.encoding = encoding
        self.degree = 1 + sum(k.degree for k in kids)
        cls._pool[encoding] = self
        return self

    def __lt__(self, other: "Tree") -> bool:
        return _tree_key(self) < _tree_key(other)

    def __repr__(self) -> str:
        return f"Tree({self.encoding!r})"

    def as_forest(self) -> "Forest":
        return Forest((self,))

    def child_forest(self) -> "Forest":
        """The unique forest f with self = bplus(f)."""
        return Forest(self.children)


class Forest:
    """A commutative multiset of rooted trees; the empty forest is the unit."""

    __slots__ = ("trees", "encoding", "degree")

    def __init__(self, trees: Iterable[Tree] = ()):
        ts = tuple(sorted(trees, key=_tree_key))
        self.trees = ts
        self.encoding = " ".join(t.encoding for t in ts) if ts else "1"
        self.degree = sum(t.degree for t in ts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Forest) and self.encoding == other.encoding

    def __hash__(self) -> int:
        return hash(self.encoding)

    def __lt__(self, other: "Forest") -> bool:
        return (self.degree, self.encoding) < (other.degree, other.encoding)

    def __bool__(self) -> bool:
        return bool(self.trees)

    def __repr__(self) -> str:
        return f"Forest({self.encoding!r})"

    def __iter__(self) -> Iterator[Tree]:
        return iter(self.trees)


LEAF = Tree(())
EMPTY_FOREST = Forest(())


def bplus(f: Forest) -> Tree:
    """Graft every root of f onto one new common root; bplus(1) is the leaf."""
    return Tree(f.trees)


def forest_product(f: Forest, g: Forest) -> Forest:
    """Disjoint union of forests (commutative, unit EMPTY_FOREST)."""
    return Forest(f.trees + g.trees)


def degree(f: Forest) -> int:
    return f.degree


def ladder(n: int) -> Forest:
    """The chain with n vertices, as a forest; ladder(0) is the empty forest."""
    if n < 0:
        raise ValueError("ladder length must be >= 0")
    f = EMPTY_FOREST
    for _ in range(n):
        f = bplus(f).as_forest()
    return f


def print_forest(f: Forest) -> str:
    return f.encoding


def parse_forest(text: str) -> Forest:
    """Parse bracket notation; insensitive to child order and whitespace."""
    if text.strip() == "1":
        return EMPTY_FOREST
    trees: list[Tree] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c == "[":
            t, i = _parse_tree(text, i)
            trees.append(t)
        else:
            raise ForestSyntaxError(f"unexpected character {c!r}", i)
    if not trees:
        raise ForestSyntaxError("empty forest text", 0)
    return Forest(trees)


def _parse_tree(text: str, i: int) -> tuple[Tree, int]:
    # text[i] == "["
    start = i
    i += 1
    kids: list[Tree] = []
    while True:
        if i >= len(text):
            raise ForestSyntaxError("unbalanced '['", start)
        c = text[i]
        if c == "]":
            return Tree(kids), i + 1
        if c == "[":
            t, i = _parse_tree(text, i)
            kids.append(t)
        elif c.isspace():
            i += 1
        else:
            raise ForestSyntaxError(f"unexpected character {c!r}", i)


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[Tree, ...]:
    """All canonical trees with n vertices, in encoding order."""
    if n < 1:
        raise ValueError("tree degree must be >= 1")
    if n == 1:
        return (LEAF,)
    return tuple(
        sorted((bplus(f) for f in enumerate_forests(n - 1)), key=lambda t: t.encoding)
    )


@lru_cache(maxsize=None)
def enumerate_forests(n: int) -> tuple[Forest, ...]:
    """All canonical forests with n vertices, in encoding order."""
    if n < 0:
        raise ValueError("forest degree must be >= 0")
    if n == 0:
        return (EMPTY_FOREST,)
    pool = [t for d in range(1, n + 1) for t in enumerate_trees(d)]

    def pick(remaining: int, start: int) -> Iterator[tuple[Tree, ...]]:
        if remaining == 0:
            yield ()
            return
        for i in range(start, len(pool)):
            t = pool[i]
            if t.degree <= remaining:
                for rest in pick(remaining - t.degree, i):
                    yield (t,) + rest

    return tuple(sorted((Forest(ts) for ts in pick(n, 0)), key=lambda f: f.encoding))
