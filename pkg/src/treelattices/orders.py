"""The five lattice families as explicit finite posets.

Orientation: the left comb is the bottom of the Tamari lattice and a right
rotation ``((A, B), C) -> (A, (B, C))`` moves up. The identity permutation is
the bottom of the weak order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .posets import FinitePoset
from .trees import (
    BiLeveledTree,
    BinaryTree,
    Permutation,
    Subset,
    WeightedTree,
    ancestors,
    bij2,
    bij2_inverse,
    bileveled_trees,
    binary_trees,
    comb_normalize,
    painted_from_weighted,
    permutations,
    subsets,
    weighted_from_painted,
    weighted_trees,
)

FAMILIES = ("tamari", "weak", "multi", "compo", "boolean")

# largest rank each family is built for without --bound
DEFAULT_BOUNDS = {"tamari": 8, "weak": 6, "multi": 6, "compo": 6, "boolean": 10}


def tamari_covers(t: BinaryTree) -> set[BinaryTree]:
    """Trees reached from ``t`` by one right rotation."""
    out = set()
    if not t:
        return out
    left, right = t
    if left:
        a, b = left
        out.add((a, (b, right)))
    out.update((x, right) for x in tamari_covers(left))
    out.update((left, x) for x in tamari_covers(right))
    return out


def weak_covers(w) -> set[Permutation]:
    """One cover per value k that precedes k + 1: swap the values k and k + 1."""
    w = Permutation(w)
    pos = {v: i for i, v in enumerate(w)}
    out = set()
    for k in range(1, len(w)):
        if pos[k] < pos[k + 1]:
            word = list(w)
            word[pos[k]], word[pos[k + 1]] = k + 1, k
            out.add(Permutation(word))
    return out


@lru_cache(maxsize=None)
def tamari_poset(n: int) -> FinitePoset:
    trees = binary_trees(n)
    return FinitePoset(trees, [(t, s) for t in trees for s in tamari_covers(t)])


@lru_cache(maxsize=None)
def weak_poset(n: int) -> FinitePoset:
    perms = permutations(n)
    return FinitePoset(perms, [(w, v) for w in perms for v in weak_covers(w)])


def multi_leq(a: BiLeveledTree, b: BiLeveledTree) -> bool:
    """``(s; S) <= (t; T)`` iff ``s <= t`` in the Tamari order and ``T`` is inside ``S``."""
    if a.nodes != b.nodes:
        raise ValueError("bi-leveled trees of different rank are not comparable")
    return b.circled <= a.circled and tamari_poset(a.nodes).leq(a.tree, b.tree)


def _largest_ideal_inside(t: BinaryTree, allowed: frozenset) -> frozenset:
    return frozenset(x for x in allowed if ancestors(t, x) <= allowed)


def _upward_closure(t: BinaryTree, nodes: frozenset) -> frozenset:
    out = set(nodes)
    for x in nodes:
        out |= ancestors(t, x)
    return frozenset(out)


def multi_join(a: BiLeveledTree, b: BiLeveledTree) -> BiLeveledTree:
    """Tamari join of the trees, circled by the largest ideal inside both circle sets."""
    if a.nodes != b.nodes:
        raise ValueError("rank mismatch")
    u = tamari_poset(a.nodes).join(a.tree, b.tree)
    return BiLeveledTree(u, _largest_ideal_inside(u, a.circled & b.circled))


def multi_meet(a: BiLeveledTree, b: BiLeveledTree) -> BiLeveledTree:
    """Tamari meet of the trees, circled by the upward closure of the union."""
    if a.nodes != b.nodes:
        raise ValueError("rank mismatch")
    u = tamari_poset(a.nodes).meet(a.tree, b.tree)
    return BiLeveledTree(u, _upward_closure(u, a.circled | b.circled))


@lru_cache(maxsize=None)
def multi_poset(n: int) -> FinitePoset:
    return FinitePoset.from_relation(bileveled_trees(n), multi_leq)


def compo_representative(v: WeightedTree) -> BiLeveledTree:
    """The bi-leveled tree whose painted view carries right combs as weights."""
    return bij2_inverse(painted_from_weighted(v))


def compo_from_bileveled(b: BiLeveledTree) -> WeightedTree:
    return weighted_from_painted(comb_normalize(bij2(b)))


def compo_leq(v: WeightedTree, w: WeightedTree) -> bool:
    return multi_leq(compo_representative(v), compo_representative(w))


def compo_join(v: WeightedTree, w: WeightedTree) -> WeightedTree:
    return compo_from_bileveled(multi_join(compo_representative(v), compo_representative(w)))


def compo_meet(v: WeightedTree, w: WeightedTree) -> WeightedTree:
    return compo_from_bileveled(multi_meet(compo_representative(v), compo_representative(w)))


@lru_cache(maxsize=None)
def compo_poset(n: int) -> FinitePoset:
    return FinitePoset.from_relation(weighted_trees(n), compo_leq)


@lru_cache(maxsize=None)
def boolean_poset(m: int) -> FinitePoset:
    subs = subsets(m)
    covers = [(s, Subset(m, s.members | {i})) for s in subs
              for i in range(1, m + 1) if i not in s.members]
    return FinitePoset(subs, covers)


@dataclass(frozen=True)
class NamedLattice:
    family: str
    rank: int
    poset: FinitePoset

    def __len__(self):
        return len(self.poset)


_BUILDERS = {
    "tamari": tamari_poset,
    "weak": weak_poset,
    "multi": multi_poset,
    "compo": compo_poset,
    "boolean": boolean_poset,
}


def build(family: str, rank: int, bound: int | None = None) -> NamedLattice:
    """Uniform factory; ``bound`` overrides the default enumeration limit."""
    if family not in _BUILDERS:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    limit = DEFAULT_BOUNDS[family] if bound is None else bound
    lowest = 0 if family in ("tamari", "weak", "boolean") else 1
    if not lowest <= rank <= limit:
        raise ValueError(f"{family} rank must lie in {lowest}..{limit}, got {rank}")
    return NamedLattice(family, rank, _BUILDERS[family](rank))
