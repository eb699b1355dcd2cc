"""Tree species, their text encodings, and the bijections between them.

A planar binary tree is a nested tuple: ``LEAF == ()`` and a node is the pair
``(left, right)``. Nodes are numbered 1..n in in-order (left to right). In the
node poset a node is greater than every node of its subtrees, so the root is
the maximum.

Rank conventions used throughout the package:

* ``Y_n``  binary trees with n nodes,
* ``S_n``  permutations of [n],
* ``M_n``  bi-leveled trees with n nodes, equivalently painted trees with
  n - 1 nodes,
* ``CK_n`` weighted trees whose weights sum to n,
* the Boolean images of rank n are subsets of [n - 1].
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

LEAF: tuple = ()

BinaryTree = tuple


def node(left: BinaryTree, right: BinaryTree) -> BinaryTree:
    return (left, right)


def is_leaf(t: BinaryTree) -> bool:
    return t == ()


@lru_cache(maxsize=None)
def node_count(t: BinaryTree) -> int:
    if not t:
        return 0
    return node_count(t[0]) + 1 + node_count(t[1])


def leaf_count(t: BinaryTree) -> int:
    return node_count(t) + 1


def check_tree(t) -> BinaryTree:
    if t == ():
        return t
    if not (isinstance(t, tuple) and len(t) == 2):
        raise ValueError(f"not a binary tree: {t!r}")
    check_tree(t[0])
    check_tree(t[1])
    return t


# --- encodings ---------------------------------------------------------------

def encode_tree(t: BinaryTree) -> str:
    if not t:
        return "."
    return "(" + encode_tree(t[0]) + encode_tree(t[1]) + ")"


def _parse_marked(text: str) -> tuple[BinaryTree, frozenset[int]]:
    """Parse the bracket grammar; "[" marks a node, "(" leaves it unmarked."""
    pos = 0
    counter = 0
    marked: set[int] = set()

    def walk():
        nonlocal pos, counter
        if pos >= len(text):
            raise ValueError(f"truncated tree encoding: {text!r}")
        ch = text[pos]
        if ch == ".":
            pos += 1
            return LEAF
        if ch not in "([":
            raise ValueError(f"unexpected {ch!r} at {pos} in {text!r}")
        close = ")" if ch == "(" else "]"
        pos += 1
        left = walk()
        counter += 1
        me = counter
        right = walk()
        if pos >= len(text) or text[pos] != close:
            raise ValueError(f"expected {close!r} at {pos} in {text!r}")
        pos += 1
        if ch == "[":
            marked.add(me)
        return (left, right)

    tree = walk()
    if pos != len(text):
        raise ValueError(f"trailing characters in {text!r}")
    return tree, frozenset(marked)


def parse_tree(text: str) -> BinaryTree:
    tree, marked = _parse_marked(text.strip())
    if marked:
        raise ValueError(f"binary tree encoding may not contain '[': {text!r}")
    return tree


def _encode_marked(t: BinaryTree, marked: frozenset[int]) -> str:
    counter = 0

    def walk(s):
        nonlocal counter
        if not s:
            return "."
        left = walk(s[0])
        counter += 1
        me = counter
        right = walk(s[1])
        if me in marked:
            return "[" + left + right + "]"
        return "(" + left + right + ")"

    return walk(t)


# --- node poset --------------------------------------------------------------

@lru_cache(maxsize=None)
def parents(t: BinaryTree) -> tuple[int, ...]:
    """``parents(t)[i]`` is the in-order index of the parent of node i (0 for the root).

    Index 0 of the result is unused.
    """
    out = [0] * (node_count(t) + 1)
    counter = 0

    def walk(s):
        nonlocal counter
        if not s:
            return None
        left = walk(s[0])
        counter += 1
        me = counter
        right = walk(s[1])
        for child in (left, right):
            if child is not None:
                out[child] = me
        return me

    walk(t)
    return tuple(out)


def ancestors(t: BinaryTree, i: int) -> frozenset[int]:
    par = parents(t)
    out = set()
    while par[i]:
        i = par[i]
        out.add(i)
    return frozenset(out)


def descendants(t: BinaryTree, i: int) -> frozenset[int]:
    return frozenset(j for j in range(1, node_count(t) + 1) if i in ancestors(t, j))


def is_upper_ideal(t: BinaryTree, nodes: Iterable[int]) -> bool:
    nodes = set(nodes)
    n = node_count(t)
    if not all(1 <= x <= n for x in nodes):
        return False
    par = parents(t)
    return all(par[x] == 0 or par[x] in nodes for x in nodes)


def upper_ideals(t: BinaryTree) -> list[frozenset[int]]:
    """All upper order ideals of the node poset, the empty one first."""
    def walk(s, offset):
        # ideals of the subtree s whose nodes are offset+1 .. offset+|s|
        if not s:
            return [frozenset()]
        m = node_count(s[0])
        me = offset + m + 1
        lefts = walk(s[0], offset)
        rights = walk(s[1], me)
        out = [frozenset()]
        for a in lefts:
            for b in rights:
                out.append(a | b | {me})
        return out

    return walk(t, 0)


def _flag(t: BinaryTree, marked: frozenset[int]):
    """Nested (left, right, flag) form with a per-node mark."""
    counter = 0

    def walk(s):
        nonlocal counter
        if not s:
            return LEAF
        left = walk(s[0])
        counter += 1
        me = counter
        right = walk(s[1])
        return (left, right, me in marked)

    return walk(t)


def _unflag(ft) -> tuple[BinaryTree, frozenset[int]]:
    counter = 0
    marked = set()

    def walk(s):
        nonlocal counter
        if not s:
            return LEAF
        left = walk(s[0])
        counter += 1
        if s[2]:
            marked.add(counter)
        right = walk(s[1])
        return (left, right)

    tree = walk(ft)
    return tree, frozenset(marked)


# --- species types -----------------------------------------------------------

@dataclass(frozen=True)
class PaintedTree:
    """A binary tree with a (possibly empty) painted upper ideal of nodes."""

    tree: BinaryTree
    painted: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "painted", frozenset(self.painted))
        if not is_upper_ideal(self.tree, self.painted):
            raise ValueError(f"painted set {sorted(self.painted)} is not an upper ideal "
                             f"of {encode_tree(self.tree)}")

    @property
    def nodes(self) -> int:
        return node_count(self.tree)

    def encode(self) -> str:
        return _encode_marked(self.tree, self.painted)

    @classmethod
    def parse(cls, text: str) -> PaintedTree:
        tree, marked = _parse_marked(text.strip())
        return cls(tree, marked)

    def __str__(self):
        return self.encode()


@dataclass(frozen=True)
class BiLeveledTree:
    """A binary tree with a circled upper ideal in which node 1 is minimal."""

    tree: BinaryTree
    circled: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "circled", frozenset(self.circled))
        t = self.tree
        if not t:
            raise ValueError("a bi-leveled tree needs at least one node")
        if not is_upper_ideal(t, self.circled):
            raise ValueError(f"circled set {sorted(self.circled)} is not an upper ideal")
        if 1 not in self.circled:
            raise ValueError("the leftmost node must be circled")
        if self.circled & descendants(t, 1):
            raise ValueError("no circled node may lie below the leftmost node")

    @property
    def nodes(self) -> int:
        return node_count(self.tree)

    def encode(self) -> str:
        return _encode_marked(self.tree, self.circled)

    @classmethod
    def parse(cls, text: str) -> BiLeveledTree:
        tree, marked = _parse_marked(text.strip())
        return cls(tree, marked)

    def __str__(self):
        return self.encode()


@dataclass(frozen=True)
class LeveledTree:
    """Binary tree with a vertical order of its nodes; the root is level 1.

    ``levels[i - 1]`` is the level of node i.
    """

    tree: BinaryTree
    levels: tuple

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        n = node_count(self.tree)
        if sorted(self.levels) != list(range(1, n + 1)):
            raise ValueError(f"levels {self.levels} are not a bijection onto [{n}]")
        par = parents(self.tree)
        for i in range(1, n + 1):
            if par[i] and self.levels[par[i] - 1] >= self.levels[i - 1]:
                raise ValueError("a parent must sit on a lower level than its child")

    def level(self, i: int) -> int:
        return self.levels[i - 1]

    def encode(self) -> str:
        return encode_tree(self.tree) + ":" + ",".join(map(str, self.levels))

    def __str__(self):
        return self.encode()


class Permutation(tuple):
    """One-line notation w(1) ... w(n)."""

    def __new__(cls, word: Iterable[int] = ()):
        word = tuple(int(x) for x in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation word: {word}")
        return super().__new__(cls, word)

    def encode(self) -> str:
        if len(self) <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        text = text.strip()
        if "," in text:
            return cls(int(x) for x in text.split(","))
        return cls(int(ch) for ch in text)

    def __str__(self):
        return self.encode()

    def __repr__(self):
        return f"Permutation({self.encode()!r})"


@dataclass(frozen=True)
class WeightedTree:
    """Binary skeleton with a positive weight on each leaf, left to right."""

    tree: BinaryTree
    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        if len(self.weights) != leaf_count(self.tree):
            raise ValueError("need exactly one weight per leaf")
        if any(w < 1 for w in self.weights):
            raise ValueError(f"weights must be positive: {self.weights}")

    @property
    def rank(self) -> int:
        return sum(self.weights)

    def encode(self) -> str:
        it = iter(self.weights)

        def walk(s):
            if not s:
                return str(next(it))
            return "[" + walk(s[0]) + "," + walk(s[1]) + "]"

        return walk(self.tree)

    @classmethod
    def parse(cls, text: str) -> WeightedTree:
        tokens = re.findall(r"\d+|[\[\],]", text.replace(" ", ""))
        pos = 0
        weights = []

        def walk():
            nonlocal pos
            tok = tokens[pos]
            pos += 1
            if tok.isdigit():
                weights.append(int(tok))
                return LEAF
            if tok != "[":
                raise ValueError(f"bad weighted tree {text!r}")
            left = walk()
            if tokens[pos] != ",":
                raise ValueError(f"bad weighted tree {text!r}")
            pos += 1
            right = walk()
            if tokens[pos] != "]":
                raise ValueError(f"bad weighted tree {text!r}")
            pos += 1
            return (left, right)

        try:
            tree = walk()
        except IndexError:
            raise ValueError(f"truncated weighted tree {text!r}") from None
        if pos != len(tokens):
            raise ValueError(f"trailing tokens in {text!r}")
        return cls(tree, tuple(weights))

    def __str__(self):
        return self.encode()


@dataclass(frozen=True)
class Composition:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts or any(p < 1 for p in self.parts):
            raise ValueError(f"not a composition: {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def encode(self) -> str:
        return "+".join(map(str, self.parts))

    @classmethod
    def parse(cls, text: str) -> Composition:
        return cls(int(x) for x in text.strip().split("+"))

    def __str__(self):
        return self.encode()


@dataclass(frozen=True)
class Subset:
    ground: int
    members: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        if self.ground < 0 or not all(1 <= x <= self.ground for x in self.members):
            raise ValueError(f"{sorted(self.members)} is not a subset of [{self.ground}]")

    def encode(self) -> str:
        return "{" + ",".join(map(str, sorted(self.members))) + "}/" + str(self.ground)

    @classmethod
    def parse(cls, text: str) -> Subset:
        m = re.fullmatch(r"\{([\d,\s]*)\}/(\d+)", text.strip())
        if not m:
            raise ValueError(f"bad subset encoding {text!r}")
        body = m.group(1).strip()
        members = [int(x) for x in body.split(",")] if body else []
        return cls(int(m.group(2)), frozenset(members))

    def __str__(self):
        return self.encode()


def encode(obj) -> str:
    """Canonical text for any species value (binary trees are bare tuples)."""
    if hasattr(obj, "encode") and not isinstance(obj, (str, bytes)):
        return obj.encode()
    if isinstance(obj, tuple):
        return encode_tree(obj)
    if isinstance(obj, (str, int)):
        return str(obj)
    raise TypeError(f"cannot encode {obj!r}")


# --- combs -------------------------------------------------------------------

def comb_left(k: int) -> BinaryTree:
    t = LEAF
    for _ in range(k):
        t = (t, LEAF)
    return t


def comb_right(k: int) -> BinaryTree:
    t = LEAF
    for _ in range(k):
        t = (LEAF, t)
    return t


# --- bij1: permutations and leveled trees -------------------------------------

def bij1(w: Sequence[int]) -> LeveledTree:
    """Permutation -> leveled tree.

    The tree is the decreasing tree of ``w``: the largest value is the root and
    the positions to its left and right build the two subtrees. Node i sits at
    level ``n + 1 - w(i)``, so the root is level 1.
    """
    w = Permutation(w)
    n = len(w)

    def build(lo, hi):
        if lo >= hi:
            return LEAF
        top = max(range(lo, hi), key=lambda i: w[i])
        return (build(lo, top), build(top + 1, hi))

    return LeveledTree(build(0, n), tuple(n + 1 - x for x in w))


def bij1_inverse(lt: LeveledTree) -> Permutation:
    n = len(lt.levels)
    return Permutation(n + 1 - x for x in lt.levels)


def leveled_trees(n: int) -> list[LeveledTree]:
    """All leveled trees with n nodes, from reversed linear extensions of each tree."""
    out = []
    for t in binary_trees(n):
        par = parents(t)
        for order in itertools.permutations(range(1, n + 1)):
            levels = [0] * n
            for lev, i in enumerate(order, start=1):
                levels[i - 1] = lev
            if all(par[i] == 0 or levels[par[i] - 1] < levels[i - 1] for i in range(1, n + 1)):
                out.append(LeveledTree(t, tuple(levels)))
    return sorted(out, key=encode)


# --- bij2: bi-leveled trees and painted trees ------------------------------------

def bij2(b: BiLeveledTree) -> PaintedTree:
    """Prune the leftmost branch: node 1 is replaced by its right subtree."""

    def prune(s):
        left, right, flag = s
        if not left:
            return right
        return (prune(left), right, flag)

    tree, painted = _unflag(prune(_flag(b.tree, b.circled)))
    return PaintedTree(tree, painted)


def bij2_inverse(p: PaintedTree) -> BiLeveledTree:
    """Graft a circled leftmost node just below the paint on the left branch."""

    def graft_left(s):
        if not s or not s[2]:
            return (LEAF, s, True)
        return (graft_left(s[0]), s[1], s[2])

    tree, circled = _unflag(graft_left(_flag(p.tree, p.painted)))
    return BiLeveledTree(tree, circled)


# --- bij3: ordered forests and binary trees ---------------------------------------

def bij3(forest: Sequence[BinaryTree]) -> BinaryTree:
    """Hang the forest, left to right, on a new left limb (bottom node first)."""
    if not forest:
        raise ValueError("bij3 needs a nonempty forest")
    t = LEAF
    for c in forest:
        t = (t, c)
    return t


def bij3_inverse(t: BinaryTree) -> tuple[BinaryTree, ...]:
    if not t:
        raise ValueError("the leaf has no left-limb forest")
    forest = []
    while t:
        forest.append(t[1])
        t = t[0]
    return tuple(reversed(forest))


# --- bij4, bij5: Boolean targets ---------------------------------------------------

def bij4(slopes: Sequence[int]) -> Subset:
    if any(s not in (1, -1) for s in slopes):
        raise ValueError(f"slopes must be +1 or -1: {slopes}")
    return Subset(len(slopes), frozenset(i for i, s in enumerate(slopes, start=1) if s == -1))


def composition_tree(c: Composition) -> PaintedTree:
    """Right combs of the given leaf counts grafted onto a painted left comb."""
    return graft(comb_left(len(c.parts) - 1), [comb_right(p - 1) for p in c.parts])


def bij5(c: Composition) -> Subset:
    """Composition of n -> its unpainted node set, a subset of [n - 1].

    In the composition tree the painted nodes sit at the partial sums
    p1, p1 + p2, ...; every other node belongs to an unpainted comb.
    """
    n = c.total
    sums = set(itertools.accumulate(c.parts[:-1]))
    return Subset(n - 1, frozenset(range(1, n)) - sums)


def bij5_inverse(s: Subset) -> Composition:
    cuts = sorted(set(range(1, s.ground + 1)) - s.members)
    bounds = [0] + cuts + [s.ground + 1]
    return Composition(b - a for a, b in zip(bounds, bounds[1:]))


# --- grafting, splitting, combing -------------------------------------------------

def graft(d: BinaryTree, forest: Sequence[BinaryTree]) -> PaintedTree:
    """Attach ``forest`` to the leaves of ``d``; the nodes of ``d`` become the paint."""
    forest = list(forest)
    if len(forest) != leaf_count(d):
        raise ValueError(f"forest has {len(forest)} trees but the base has {leaf_count(d)} leaves")
    it = iter(forest)

    def plain(s):
        return LEAF if not s else (plain(s[0]), plain(s[1]), False)

    def walk(s):
        if not s:
            return plain(next(it))
        return (walk(s[0]), walk(s[1]), True)

    tree, painted = _unflag(walk(d))
    return PaintedTree(tree, painted)


def ungraft(p: PaintedTree) -> tuple[BinaryTree, tuple[BinaryTree, ...]]:
    """Inverse of :func:`graft`: the painted skeleton and the unpainted forest."""
    forest: list[BinaryTree] = []

    def plain(s):
        return LEAF if not s else (plain(s[0]), plain(s[1]))

    def walk(s):
        if not s or not s[2]:
            forest.append(plain(s))
            return LEAF
        return (walk(s[0]), walk(s[1]))

    d = walk(_flag(p.tree, p.painted))
    return d, tuple(forest)


def _split_flagged(s, k):
    # nodes with in-order index <= k go left
    if not s:
        return LEAF, LEAF
    m = _flagged_size(s[0])
    if k <= m:
        a, b = _split_flagged(s[0], k)
        return a, (b,) + tuple(s[1:])
    a, b = _split_flagged(s[1], k - m - 1)
    return (s[0], a) + tuple(s[2:]), b


@lru_cache(maxsize=None)
def _flagged_size(s) -> int:
    if not s:
        return 0
    return _flagged_size(s[0]) + 1 + _flagged_size(s[1])


def split_at(t: BinaryTree, k: int) -> tuple[BinaryTree, BinaryTree]:
    """Split along the path from leaf k (0-based, left to right) to the root."""
    if not 0 <= k <= node_count(t):
        raise ValueError(f"leaf index {k} out of range")
    return _split_flagged(t, k)


def split(t: BinaryTree) -> list[tuple[BinaryTree, BinaryTree]]:
    """All splittings of ``t``, one per leaf, ordered by leaf."""
    return [split_at(t, k) for k in range(leaf_count(t))]


def split_painted(p: PaintedTree) -> list[tuple[PaintedTree, PaintedTree]]:
    ft = _flag(p.tree, p.painted)
    out = []
    for k in range(p.nodes + 1):
        a, b = _split_flagged(ft, k)
        out.append((PaintedTree(*_unflag(a)), PaintedTree(*_unflag(b))))
    return out


def comb_normalize(p: PaintedTree) -> PaintedTree:
    """Replace every maximal unpainted subtree by a right comb of equal size."""
    d, forest = ungraft(p)
    return graft(d, [comb_right(node_count(c)) for c in forest])


def is_comb_normal(p: PaintedTree) -> bool:
    _, forest = ungraft(p)
    return all(c == comb_right(node_count(c)) for c in forest)


def weighted_from_painted(p: PaintedTree) -> WeightedTree:
    if not is_comb_normal(p):
        raise ValueError(f"{p.encode()} has unpainted subtrees that are not right combs")
    d, forest = ungraft(p)
    return WeightedTree(d, tuple(leaf_count(c) for c in forest))


def painted_from_weighted(v: WeightedTree) -> PaintedTree:
    return graft(v.tree, [comb_right(w - 1) for w in v.weights])


# --- enumeration -------------------------------------------------------------------

@lru_cache(maxsize=None)
def _trees(n: int) -> tuple:
    if n == 0:
        return (LEAF,)
    return tuple((a, b) for i in range(n) for a in _trees(i) for b in _trees(n - 1 - i))


def binary_trees(n: int) -> list[BinaryTree]:
    return sorted(_trees(n), key=encode_tree)


def painted_trees(nodes: int) -> list[PaintedTree]:
    """Painted trees with the given number of nodes (not the M_n rank)."""
    out = [PaintedTree(t, ideal) for t in _trees(nodes) for ideal in upper_ideals(t)]
    return sorted(out, key=encode)


def bileveled_trees(n: int) -> list[BiLeveledTree]:
    out = []
    for t in _trees(n):
        below = descendants(t, 1)
        for ideal in upper_ideals(t):
            if 1 in ideal and not ideal & below:
                out.append(BiLeveledTree(t, ideal))
    return sorted(out, key=encode)


def compositions(n: int) -> list[Composition]:
    out = []
    for r in range(n):
        for cuts in itertools.combinations(range(1, n), r):
            bounds = (0,) + cuts + (n,)
            out.append(Composition(b - a for a, b in zip(bounds, bounds[1:])))
    return sorted(out, key=encode)


def weighted_trees(n: int) -> list[WeightedTree]:
    out = []
    for j in range(n):
        for c in compositions(n):
            if len(c.parts) == j + 1:
                out.extend(WeightedTree(t, c.parts) for t in _trees(j))
    return sorted(out, key=encode)


def subsets(m: int) -> list[Subset]:
    out = [Subset(m, frozenset(c)) for r in range(m + 1)
           for c in itertools.combinations(range(1, m + 1), r)]
    return sorted(out, key=encode)


def permutations(n: int) -> list[Permutation]:
    return sorted((Permutation(w) for w in itertools.permutations(range(1, n + 1))), key=encode)


SPECIES_KINDS = ("binary", "leveled", "bileveled", "painted", "weighted", "composition",
                 "subset", "permutation")


def enumerate_species(kind: str, rank: int) -> list:
    """All objects of ``kind`` at ``rank``, sorted by canonical encoding.

    ``painted`` at rank n means painted trees with n - 1 nodes, matching M_n;
    ``subset`` at rank m means subsets of [m].
    """
    if rank < 0:
        raise ValueError("rank must be nonnegative")
    if kind == "binary":
        return binary_trees(rank)
    if kind == "leveled":
        return leveled_trees(rank)
    if kind == "bileveled":
        return bileveled_trees(rank) if rank else []
    if kind == "painted":
        return painted_trees(rank - 1) if rank else []
    if kind == "weighted":
        return weighted_trees(rank) if rank else []
    if kind == "composition":
        return compositions(rank) if rank else []
    if kind == "subset":
        return subsets(rank)
    if kind == "permutation":
        return permutations(rank)
    raise ValueError(f"unknown species kind {kind!r}; expected one of {SPECIES_KINDS}")


def parse(kind: str, text: str):
    """Parse an encoding of the given species kind."""
    if kind == "binary":
        return parse_tree(text)
    if kind == "painted":
        return PaintedTree.parse(text)
    if kind == "bileveled":
        return BiLeveledTree.parse(text)
    if kind == "weighted":
        return WeightedTree.parse(text)
    if kind == "composition":
        return Composition.parse(text)
    if kind == "subset":
        return Subset.parse(text)
    if kind == "permutation":
        return Permutation.parse(text)
    raise ValueError(f"cannot parse species kind {kind!r}")
