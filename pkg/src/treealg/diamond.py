"""The diamond product on Q<x, y> and the forest-to-polynomial map.

The diamond product is defined on words by recursion on last letters:

    w <> 1  = 1 <> w = w
    vx <> wx = (v <> wx)x - (vy <> w)x
    vx <> wy = (v <> wy)x + (vx <> w)y
    vy <> wx = (v <> wx)y + (vy <> w)x
    vy <> wy = (v <> wy)y - (vx <> w)y

and extended bilinearly. ``sigma`` sends a forest to its polynomial value:
the leaf goes to y, grafting acts by the degree-raising operator, and a
product of trees goes to the diamond product of their values.
"""
from __future__ import annotations

from .hopf import HElem
from .trees import Forest, LEAF, Tree
from .words import Poly, Y, op_R

_DIAMOND_CACHE: dict[tuple[str, str], Poly] = {}


def _append(p: Poly, letter: str) -> Poly:
    return Poly({w + letter: c for w, c in p.terms.items()})


def _diamond_words(a: str, b: str) -> Poly:
    """Diamond product of two single words."""
    if not a:
        return Poly.from_word(b)
    if not b:
        return Poly.from_word(a)
    cached = _DIAMOND_CACHE.get((a, b))
    if cached is not None:
        return cached
    v, p = a[:-1], a[-1]
    w, q = b[:-1], b[-1]
    if p == "x" and q == "x":
        out = _append(_diamond_words(v, b), "x") - _append(_diamond_words(v + "y", w), "x")
    elif p == "x" and q == "y":
        out = _append(_diamond_words(v, b), "x") + _append(_diamond_words(a, w), "y")
    elif p == "y" and q == "x":
        out = _append(_diamond_words(v, b), "y") + _append(_diamond_words(a, w), "x")
    else:  # p == q == "y"
        out = _append(_diamond_words(v, b), "y") - _append(_diamond_words(v + "x", w), "y")
    _DIAMOND_CACHE[(a, b)] = out
    return out


def diamond(v: Poly, w: Poly) -> Poly:
    """Bilinear extension of the word-level diamond recursion."""
    out = Poly.zero()
    for a, ca in v.terms.items():
        for b, cb in w.terms.items():
            out = out + (ca * cb) * _diamond_words(a, b)
    return out


_SIGMA_TREE: dict[Tree, Poly] = {}


def _sigma_tree(t: Tree) -> Poly:
    cached = _SIGMA_TREE.get(t)
    if cached is not None:
        return cached
    if t is LEAF:
        out = Y
    else:
        out = op_R(sigma_forest(t.child_forest()))
    _SIGMA_TREE[t] = out
    return out


def sigma_forest(f: Forest) -> Poly:
    """The polynomial value of a single forest (diamond product of tree values)."""
    out = Poly.one()
    for t in f.trees:
        out = diamond(out, _sigma_tree(t))
    return out


def sigma(a: HElem) -> Poly:
    """Linear extension of the forest-to-polynomial homomorphism."""
    out = Poly.zero()
    for f, c in a.terms.items():
        out = out + c * sigma_forest(f)
    return out
