"""Projections between the lattices and their sections.

Element-level maps take the natural species value (a permutation, a painted
tree, a weighted tree, ...). :func:`as_poset_map` materializes any registered
map over the built lattices, converting ``M_n`` keys (bi-leveled trees) to
painted trees where needed, so that rank bookkeeping lives in one place.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .orders import build
from .posets import MobiusReport, PosetMap, RetractReport, mobius_retract_identity, verify_interval_retract
from .trees import (
    BiLeveledTree,
    BinaryTree,
    Composition,
    PaintedTree,
    Permutation,
    Subset,
    WeightedTree,
    bij1,
    bij2,
    bij2_inverse,
    bij3,
    bij3_inverse,
    bij4,
    bij5,
    bij5_inverse,
    comb_left,
    comb_normalize,
    comb_right,
    graft,
    leaf_count,
    node_count,
    painted_from_weighted,
    ungraft,
    weighted_from_painted,
)


# --- classical maps ---------------------------------------------------------------

def beta(w) -> BiLeveledTree:
    """Circle every node on or below the level of the leftmost node, then forget levels."""
    lt = bij1(w)
    mark = lt.level(1)
    return BiLeveledTree(lt.tree, frozenset(i for i, lev in enumerate(lt.levels, start=1) if lev <= mark))


def phi(b: BiLeveledTree) -> BinaryTree:
    return b.tree


def theta(w) -> BinaryTree:
    """Tonks projection: ``phi`` after ``beta``."""
    return phi(beta(w))


def slopes(t: BinaryTree) -> tuple[int, ...]:
    """Slope of each branch off the limbs, drawn at 45 degrees.

    Interior leaves 1..n-1 are read left to right; a left child climbs to the
    upper left and has slope -1, a right child has slope +1.
    """
    sides: list[int] = []

    def walk(s, side):
        if not s:
            sides.append(side)
            return
        walk(s[0], -1)
        walk(s[1], 1)

    walk(t, 0)
    return tuple(sides[1:-1])


def loday_ronco(t: BinaryTree) -> Subset:
    if not t:
        raise ValueError("the Loday-Ronco map needs a tree with at least one node")
    return bij4(slopes(t))


def descents(w) -> Subset:
    w = Permutation(w)
    return Subset(max(len(w) - 1, 0), frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i]))


# --- the four projections and their sections ---------------------------------------

def gamma(p: PaintedTree) -> BinaryTree:
    """Collapse the painted part to a single left limb carrying the unpainted forest."""
    _, forest = ungraft(p)
    return bij3(forest)


def gamma_section(t: BinaryTree) -> PaintedTree:
    forest = bij3_inverse(t)
    return graft(comb_left(len(forest) - 1), forest)


def varphi(p: PaintedTree) -> WeightedTree:
    return weighted_from_painted(comb_normalize(p))


def varphi_section(v: WeightedTree) -> PaintedTree:
    return painted_from_weighted(v)


def hat_varphi(t: BinaryTree) -> Subset:
    # the forest grafted to a painted left comb is the gamma_section view of t
    v = varphi(gamma_section(t))
    return bij5(Composition(v.weights))


def hat_varphi_section(s: Subset) -> BinaryTree:
    c = bij5_inverse(s)
    return bij3([comb_right(p - 1) for p in c.parts])


def hat_gamma(v: WeightedTree) -> Subset:
    """Replace the painted skeleton by a left comb; the weights become a composition."""
    return bij5(Composition(v.weights))


def hat_gamma_section(s: Subset) -> WeightedTree:
    c = bij5_inverse(s)
    return WeightedTree(comb_left(len(c.parts) - 1), c.parts)


# --- registry -----------------------------------------------------------------------

def _same(n):
    return n


def _minus_one(n):
    return n - 1


@dataclass(frozen=True)
class MapSpec:
    name: str
    source: str
    target: str
    func: Callable
    target_rank: Callable = _same
    source_rank: Callable = _same
    # element kinds as seen by func, used for parsing on the command line
    source_kind: str = ""


def _on_painted(f):
    return lambda b: f(bij2(b))


def _to_multi(f):
    return lambda x: bij2_inverse(f(x))


REGISTRY: dict[str, MapSpec] = {
    "beta": MapSpec("beta", "weak", "multi", beta, source_kind="permutation"),
    "phi": MapSpec("phi", "multi", "tamari", phi, source_kind="bileveled"),
    "theta": MapSpec("theta", "weak", "tamari", theta, source_kind="permutation"),
    "descents": MapSpec("descents", "weak", "boolean", descents, _minus_one, source_kind="permutation"),
    "loday_ronco": MapSpec("loday_ronco", "tamari", "boolean", loday_ronco, _minus_one, source_kind="binary"),
    "gamma": MapSpec("gamma", "multi", "tamari", _on_painted(gamma), source_kind="bileveled"),
    "gamma_section": MapSpec("gamma_section", "tamari", "multi", _to_multi(gamma_section),
                             source_kind="binary"),
    "varphi": MapSpec("varphi", "multi", "compo", _on_painted(varphi), source_kind="bileveled"),
    "varphi_section": MapSpec("varphi_section", "compo", "multi", _to_multi(varphi_section),
                              source_kind="weighted"),
    "hat_varphi": MapSpec("hat_varphi", "tamari", "boolean", hat_varphi, _minus_one, source_kind="binary"),
    "hat_varphi_section": MapSpec("hat_varphi_section", "boolean", "tamari", hat_varphi_section,
                                  source_rank=_minus_one, source_kind="subset"),
    "hat_gamma": MapSpec("hat_gamma", "compo", "boolean", hat_gamma, _minus_one, source_kind="weighted"),
    "hat_gamma_section": MapSpec("hat_gamma_section", "boolean", "compo", hat_gamma_section,
                                 source_rank=_minus_one, source_kind="subset"),
}

RETRACTS = {
    "gamma": ("gamma", "gamma_section"),
    "varphi": ("varphi", "varphi_section"),
    "hat_varphi": ("hat_varphi", "hat_varphi_section"),
    "hat_gamma": ("hat_gamma", "hat_gamma_section"),
    "beta": ("beta", "beta_section"),
}


@lru_cache(maxsize=None)
def as_poset_map(name: str, rank: int) -> PosetMap:
    """Materialize a registered map at ``rank`` (the rank of the upper lattice)."""
    if name == "beta_section":
        return beta_section_map(rank)
    try:
        entry = REGISTRY[name]
    except KeyError:
        raise ValueError(f"unknown map {name!r}; known: {sorted(REGISTRY) + ['beta_section']}") from None
    if rank < 1:
        raise ValueError("maps are defined from rank 1 on")
    source = build(entry.source, entry.source_rank(rank)).poset
    target = build(entry.target, entry.target_rank(rank)).poset
    return PosetMap(source, target, {x: entry.func(x) for x in source}, name=name)


@lru_cache(maxsize=None)
def beta_section_map(rank: int) -> PosetMap:
    """An order-preserving section of ``beta``.

    Fiber minima alone are not monotone from rank 4 on, so this searches
    depth first: targets in linear-extension order, and in each fiber the
    lowest compatible permutation first. The result is deterministic.
    """
    b = as_poset_map("beta", rank)
    P, Q = b.source, b.target
    fibers = {y: sorted(xs, key=P.index.__getitem__) for y, xs in b.fibers().items()}
    targets = list(Q.elements)
    chosen: dict = {}

    def fits(y, x):
        return all((not Q.leq(y2, y) or P.leq(x2, x)) and (not Q.leq(y, y2) or P.leq(x, x2))
                   for y2, x2 in chosen.items())

    def search(k):
        if k == len(targets):
            return True
        y = targets[k]
        for x in fibers[y]:
            if fits(y, x):
                chosen[y] = x
                if search(k + 1):
                    return True
                del chosen[y]
        return False

    if not search(0):
        raise ValueError(f"beta has no order-preserving section at rank {rank}")
    return PosetMap(Q, P, dict(chosen), name="beta_section")


def verify_retract(name: str, rank: int) -> tuple[RetractReport, MobiusReport]:
    proj, sect = RETRACTS[name]
    f = as_poset_map(proj, rank)
    g = as_poset_map(sect, rank)
    return verify_interval_retract(f, g), mobius_retract_identity(f)
