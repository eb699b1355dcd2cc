"""Coalgebras of binary trees (YSym) and painted trees (PSym).

Elements are :class:`LinearCombination` objects with exact integer
coefficients. Basis keys are binary trees for YSym, :class:`PaintedTree`
values for PSym, and pairs of keys for tensors. The degree of a key is its
node count; the bare leaf is the unit in both coalgebras.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable

from .orders import multi_poset, tamari_poset
from .posets import FinitePoset
from .trees import (
    LEAF,
    BinaryTree,
    PaintedTree,
    binary_trees,
    bij2_inverse,
    encode,
    graft,
    leaf_count,
    node_count,
    painted_trees,
    split,
    split_painted,
)


class LinearCombination(dict):
    """Sparse formal sum ``key -> int``; zero coefficients are never stored."""

    def __init__(self, terms: Iterable | dict = ()):
        super().__init__()
        if isinstance(terms, dict):
            terms = terms.items()
        for key, coef in terms:
            self.add_term(key, coef)

    @classmethod
    def basis(cls, key) -> LinearCombination:
        return cls([(key, 1)])

    def add_term(self, key, coef: int):
        if not isinstance(coef, int):
            raise TypeError(f"coefficients must be exact integers, got {coef!r}")
        total = self.get(key, 0) + coef
        if total:
            self[key] = total
        else:
            self.pop(key, None)

    def __add__(self, other):
        out = LinearCombination(self)
        for k, c in other.items():
            out.add_term(k, c)
        return out

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar: int):
        return LinearCombination((k, scalar * c) for k, c in self.items())

    def __neg__(self):
        return (-1) * self

    def map_keys(self, f: Callable) -> LinearCombination:
        out = LinearCombination()
        for k, c in self.items():
            out.add_term(f(k), c)
        return out

    def sorted_terms(self) -> list:
        return sorted(self.items(), key=lambda kc: _key_text(kc[0]))

    def format(self) -> str:
        if not self:
            return "0"
        return "\n".join(f"{c} * {_key_text(k)}" for k, c in self.sorted_terms())


class Tensor(tuple):
    """Key of a tensor product of basis elements.

    A pair of binary trees is itself a binary tree, so tensors need their own type.
    """

    def __repr__(self):
        return "Tensor" + tuple.__repr__(self)


def _key_text(key) -> str:
    if isinstance(key, Tensor):
        return "(" + " ⊗ ".join(_key_text(k) for k in key) + ")"
    return encode(key)


def degree(key) -> int:
    if isinstance(key, PaintedTree):
        return key.nodes
    if isinstance(key, Tensor):
        return sum(degree(k) for k in key)
    return node_count(key)


def tensor(x: LinearCombination, y: LinearCombination) -> LinearCombination:
    out = LinearCombination()
    for a, ca in x.items():
        for b, cb in y.items():
            out.add_term(Tensor((a, b)), ca * cb)
    return out


# --- coproducts --------------------------------------------------------------------

def coproduct_ysym(x: LinearCombination) -> LinearCombination:
    """Sum over all splittings of every tree in the support."""
    out = LinearCombination()
    for t, c in x.items():
        for pair in split(t):
            out.add_term(Tensor(pair), c)
    return out


def coproduct_psym(x: LinearCombination) -> LinearCombination:
    """Splitting of painted trees; each node keeps its paint."""
    out = LinearCombination()
    for p, c in x.items():
        for pair in split_painted(p):
            out.add_term(Tensor(pair), c)
    return out


def counit(x: LinearCombination) -> int:
    """Coefficient of the degree-0 basis element."""
    return sum(c for k, c in x.items() if degree(k) == 0)


def _left(f: Callable, x: LinearCombination) -> LinearCombination:
    """``(f ⊗ id)`` where ``f`` maps a basis key to a linear combination."""
    out = LinearCombination()
    for (a, b), c in x.items():
        for a2, c2 in f(LinearCombination.basis(a)).items():
            out.add_term(Tensor((a2, b)), c * c2)
    return out


def _right(f: Callable, x: LinearCombination) -> LinearCombination:
    out = LinearCombination()
    for (a, b), c in x.items():
        for b2, c2 in f(LinearCombination.basis(b)).items():
            out.add_term(Tensor((a, b2)), c * c2)
    return out


def _flatten_left(x):
    return x.map_keys(lambda k: Tensor((k[0][0], k[0][1], k[1])))


def _flatten_right(x):
    return x.map_keys(lambda k: Tensor((k[0], k[1][0], k[1][1])))


def coassociativity_defect(delta: Callable, x: LinearCombination) -> LinearCombination:
    """``(Δ⊗id)Δx - (id⊗Δ)Δx`` on triple keys; zero when coassociative."""
    d = delta(x)
    return _flatten_left(_left(delta, d)) - _flatten_right(_right(delta, d))


def counit_defect(delta: Callable, x: LinearCombination) -> tuple[LinearCombination, LinearCombination]:
    """``(ε⊗id)Δx - x`` and ``(id⊗ε)Δx - x``."""
    d = delta(x)
    left = LinearCombination()
    right = LinearCombination()
    for (a, b), c in d.items():
        if degree(a) == 0:
            left.add_term(b, c)
        if degree(b) == 0:
            right.add_term(a, c)
    return left - x, right - x


# --- M-basis and primitives in YSym --------------------------------------------------

def m_basis(t: BinaryTree) -> LinearCombination:
    """``M_t`` in the fundamental basis: Moebius inversion over the Tamari up-set of t."""
    P = tamari_poset(node_count(t))
    return LinearCombination((s, P.mobius(t, s)) for s in P.interval_elements(t, _top(P)))


def f_from_m(t: BinaryTree) -> LinearCombination:
    """``F_t = sum of M_s over s >= t``, as a combination of M-basis keys."""
    P = tamari_poset(node_count(t))
    return LinearCombination((s, 1) for s in P.interval_elements(t, _top(P)))


def m_to_f(x: LinearCombination) -> LinearCombination:
    out = LinearCombination()
    for t, c in x.items():
        out = out + c * m_basis(t)
    return out


def _top(P: FinitePoset):
    return P.elements[-1]


def is_progressive(t: BinaryTree) -> bool:
    """No internal node on the right limb above the root."""
    return bool(t) and t[1] == LEAF


def is_primitive(x: LinearCombination, coproduct: Callable, unit) -> bool:
    """Exact test of ``Δx = 1⊗x + x⊗1`` for a homogeneous element of positive degree."""
    degrees = {degree(k) for k in x}
    if len(degrees) > 1:
        raise ValueError("is_primitive expects a homogeneous element")
    if degrees == {0}:
        raise ValueError("degree-0 elements are not tested for primitivity")
    one = LinearCombination.basis(unit)
    return coproduct(x) == tensor(one, x) + tensor(x, one)


def ysym_primitive_basis(n: int) -> list[tuple[BinaryTree, LinearCombination]]:
    return [(t, m_basis(t)) for t in binary_trees(n) if is_progressive(t)]


# --- PSym ---------------------------------------------------------------------------

PSYM_UNIT = PaintedTree(LEAF)


def compose_coalgebra_degree(n: int) -> list[tuple[BinaryTree, tuple, PaintedTree]]:
    """Decomposable tensors ``(d; c_0, ..., c_k)`` of total degree n and their grafts.

    Sorted by the canonical encoding of the resulting painted tree.
    """
    out = []
    for k in range(n + 1):
        for d in binary_trees(k):
            rest = n - k
            for sizes in _weak_compositions(rest, k + 1):
                for forest in itertools.product(*(binary_trees(s) for s in sizes)):
                    out.append((d, forest, graft(d, forest)))
    return sorted(out, key=lambda item: item[2].encode())


def _weak_compositions(total: int, parts: int):
    for cuts in itertools.combinations(range(total + parts - 1), parts - 1):
        bounds = (-1,) + cuts + (total + parts - 1,)
        yield tuple(b - a - 1 for a, b in zip(bounds, bounds[1:]))


@dataclass(frozen=True)
class Subinterval:
    """A subinterval of the painted-tree lattice, with its skeleton parametrization."""

    kind: str  # "fixed-forest" or "unpainted"
    poset: FinitePoset  # keys are PaintedTree
    parameter: dict  # binary tree -> PaintedTree
    forest: tuple = ()

    def describe(self) -> str:
        if self.kind == "unpainted":
            return "unpainted trees"
        return "fixed unpainted forest " + " ".join(encode(c) for c in self.forest)


def _painted_poset(nodes: int) -> FinitePoset:
    """Painted trees with ``nodes`` nodes, ordered as M_{nodes+1}."""
    M = multi_poset(nodes + 1)
    keys = painted_trees(nodes)
    return _relabel(M, {bij2_inverse(p): p for p in keys})


_PAINTED_CACHE: dict = {}


def _relabel(P: FinitePoset, rename: dict) -> FinitePoset:
    key = id(P)
    if key not in _PAINTED_CACHE:
        _PAINTED_CACHE[key] = FinitePoset([rename[x] for x in P.elements],
                                          [(rename[a], rename[b]) for a, b in P.covers])
    return _PAINTED_CACHE[key]


def painted_poset(nodes: int) -> FinitePoset:
    return _painted_poset(nodes)


def fixed_forest_subinterval(forest) -> Subinterval:
    """Painted trees with the given unpainted forest and any painted skeleton."""
    forest = tuple(forest)
    if not forest:
        raise ValueError("a forest needs at least one tree")
    j = len(forest) - 1
    nodes = j + sum(node_count(c) for c in forest)
    P = painted_poset(nodes)
    param = {d: graft(d, forest) for d in binary_trees(j)}
    keys = list(param.values())
    if not P.is_interval(keys):
        raise ValueError("the fixed-forest set is not an interval")
    return Subinterval("fixed-forest", P.subposet(keys), param, forest)


def unpainted_subinterval(nodes: int) -> Subinterval:
    """Painted trees with an empty painted ideal."""
    P = painted_poset(nodes)
    param = {t: PaintedTree(t) for t in binary_trees(nodes)}
    keys = list(param.values())
    if not P.is_interval(keys):
        raise ValueError("the unpainted trees do not form an interval")
    return Subinterval("unpainted", P.subposet(keys), param)


def subinterval_inversion(sub: Subinterval, t: BinaryTree) -> LinearCombination:
    """Moebius inversion at the element with skeleton parameter ``t``:
    ``sum over y >= x in the subinterval of mu(x, y) F_y``."""
    if t not in sub.parameter:
        raise ValueError(f"{encode(t)} does not parametrize this subinterval")
    x = sub.parameter[t]
    P = sub.poset
    return LinearCombination((y, P.mobius(x, y)) for y in P if P.leq(x, y))


def psym_primitive_type1(forest, t: BinaryTree) -> LinearCombination:
    """Inversion over the subinterval with the given fixed unpainted forest."""
    forest = tuple(forest)
    if len(forest) != leaf_count(t):
        raise ValueError(f"forest of {len(forest)} trees cannot be grafted on {encode(t)}")
    return subinterval_inversion(fixed_forest_subinterval(forest), t)


def psym_primitive_type2(t: BinaryTree) -> LinearCombination:
    """Inversion over the unpainted trees, at the unpainted copy of ``t``."""
    return subinterval_inversion(unpainted_subinterval(node_count(t)), t)


@dataclass(frozen=True)
class PrimitiveRecord:
    element: LinearCombination
    source: str  # which subinterval or basis produced it
    parameter: BinaryTree
    verified: bool


def type1_forests(n: int) -> list[tuple]:
    """Forests ``(|, c_1, ..., c_{j-1}, |)`` with bare end trees, total degree n."""
    out = []
    for j in range(1, n + 1):
        rest = n - j
        for sizes in _weak_compositions(rest, j - 1) if j > 1 else ([()] if rest == 0 else []):
            for inner in itertools.product(*(binary_trees(s) for s in sizes)):
                out.append((LEAF,) + tuple(inner) + (LEAF,))
    return out


def psym_primitives(n: int) -> list[PrimitiveRecord]:
    """Candidate cogenerating primitives of degree n, each checked exactly."""
    out = []
    for t in binary_trees(n):
        if is_progressive(t):
            x = psym_primitive_type2(t)
            out.append(PrimitiveRecord(x, "unpainted trees", t, is_primitive(x, coproduct_psym, PSYM_UNIT)))
    for forest in type1_forests(n):
        sub = fixed_forest_subinterval(forest)
        for t in sub.parameter:
            if is_progressive(t):
                x = subinterval_inversion(sub, t)
                out.append(PrimitiveRecord(x, sub.describe(), t, is_primitive(x, coproduct_psym, PSYM_UNIT)))
    return out


def ysym_primitives(n: int) -> list[PrimitiveRecord]:
    return [PrimitiveRecord(x, "M-basis", t, is_primitive(x, coproduct_ysym, LEAF))
            for t, x in ysym_primitive_basis(n)]
