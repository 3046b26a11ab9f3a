"""The linear action of forests on Q<x, y> (rooted tree maps).

The action is fixed by four rules: the leaf sends x to xy and y to -xy;
a grafted tree acts on letters through the degree-raising operator applied
to the child forest's value on x; a product of trees acts on letters by
composition; and on a longer word w.v the action is the coproduct-driven
recursion

    f(wv) = sum over coproduct terms (f1, f2) of  f1(w) * f2(v).

The empty forest acts as the identity and every nonempty forest kills
constants. Evaluations are memoized per (forest, word).
"""
from __future__ import annotations

from .hopf import HElem, _forest_coproduct
from .trees import EMPTY_FOREST, Forest, LEAF, Tree
from .words import Poly, X, op_R

_XY = Poly.from_word("xy")
_ON_WORD_CACHE: dict[tuple[Forest, str], Poly] = {}
_TREE_ON_X: dict[Tree, Poly] = {}


def rtm_tree_on_letter(t: Tree, v: str) -> Poly:
    """Value of a single tree on the letter "x" or "y"."""
    if v not in ("x", "y"):
        raise ValueError(f"expected letter 'x' or 'y', got {v!r}")
    on_x = _TREE_ON_X.get(t)
    if on_x is None:
        if t is LEAF:
            on_x = _XY
        else:
            on_x = op_R(_forest_on_word(t.child_forest(), "x"))
        _TREE_ON_X[t] = on_x
    return on_x if v == "x" else -on_x


def _forest_on_word(f: Forest, w: str) -> Poly:
    if not f.trees:
        return Poly.from_word(w)
    if not w:
        return Poly.zero()
    key = (f, w)
    cached = _ON_WORD_CACHE.get(key)
    if cached is not None:
        return cached
    if len(w) == 1:
        if len(f.trees) == 1:
            out = rtm_tree_on_letter(f.trees[0], w)
        else:
            # composition: first canonical tree applied after the rest
            head, rest = f.trees[0], Forest(f.trees[1:])
            out = _forest_on_poly(head.as_forest(), _forest_on_word(rest, w))
    else:
        head_word, last = w[:-1], w[-1]
        out = Poly.zero()
        for (f1, f2), c in _forest_coproduct(f).terms.items():
            left = _forest_on_word(f1, head_word)
            if left.is_zero():
                continue
            right = _forest_on_word(f2, last)
            if right.is_zero():
                continue
            out = out + c * (left * right)
    _ON_WORD_CACHE[key] = out
    return out


def _forest_on_poly(f: Forest, p: Poly) -> Poly:
    out = Poly.zero()
    for w, c in p.terms.items():
        out = out + c * _forest_on_word(f, w)
    return out


def rtm_apply(f: HElem, w: Poly) -> Poly:
    """Evaluate the combination f of forests on the polynomial w."""
    out = Poly.zero()
    for forest, c in f.terms.items():
        out = out + c * _forest_on_poly(forest, w)
    return out


def rho_is_zero_on_x(f: HElem) -> bool:
    """Whether f's map vanishes, certified by its value on x alone.

    Inputs with an empty-forest component are rejected: for those the value
    on x does not determine the whole map.
    """
    if EMPTY_FOREST in f.terms:
        raise ValueError("input must have no degree-0 component")
    return rtm_apply(f, X).is_zero()
