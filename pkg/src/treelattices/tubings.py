"""Tubings of numbered graphs and the order on maximal tubings.

Node numbering is part of the input: relabelling a graph can change the poset.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .posets import FinitePoset
from .trees import Permutation


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset = field(default_factory=frozenset)
    name: str = ""

    def __post_init__(self):
        edges = set()
        for e in self.edges:
            a, b = sorted(e)
            if a == b or not 1 <= a <= self.n or not 1 <= b <= self.n:
                raise ValueError(f"bad edge {e!r} on {self.n} nodes")
            edges.add((a, b))
        object.__setattr__(self, "edges", frozenset(edges))
        if self.n < 1 or not self.is_connected(range(1, self.n + 1)):
            raise ValueError("graph must be nonempty and connected")

    @property
    def nodes(self) -> frozenset:
        return frozenset(range(1, self.n + 1))

    def neighbours(self, v: int) -> set:
        return {b for a, b in self.edges if a == v} | {a for a, b in self.edges if b == v}

    def is_connected(self, nodes) -> bool:
        nodes = set(nodes)
        if not nodes:
            return False
        start = min(nodes)
        seen = {start}
        stack = [start]
        while stack:
            for w in self.neighbours(stack.pop()) & nodes:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == nodes

    def components(self, nodes) -> list[frozenset]:
        left = set(nodes)
        out = []
        while left:
            start = min(left)
            comp = {start}
            stack = [start]
            while stack:
                for w in self.neighbours(stack.pop()) & left:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            left -= comp
            out.append(frozenset(comp))
        return out


GRAPH_FAMILIES = ("complete", "path", "cycle", "star")


def graph_family(name: str, n: int, center: int | None = None) -> SimpleGraph:
    """Named graphs: path and cycle numbered consecutively; star centre defaults to node n."""
    if n < 1:
        raise ValueError("need at least one node")
    if name == "complete":
        edges = itertools.combinations(range(1, n + 1), 2)
    elif name == "path":
        edges = [(i, i + 1) for i in range(1, n)]
    elif name == "cycle":
        edges = [(i, i + 1) for i in range(1, n)] + ([(n, 1)] if n > 2 else [])
    elif name == "star":
        c = n if center is None else center
        if not 1 <= c <= n:
            raise ValueError(f"star centre {c} is not a node")
        edges = [(c, i) for i in range(1, n + 1) if i != c]
    else:
        raise ValueError(f"unknown graph family {name!r}; expected one of {GRAPH_FAMILIES}")
    return SimpleGraph(n, frozenset(edges), name=f"{name}-{n}")


def check_tube(G: SimpleGraph, tube) -> frozenset:
    tube = frozenset(tube)
    if not tube <= G.nodes or not G.is_connected(tube):
        raise ValueError(f"{sorted(tube)} is not a tube of {G.name or 'the graph'}")
    return tube


def compatible(u, v, G: SimpleGraph) -> bool:
    """Nested (strictly) or far apart (the union induces a disconnected subgraph)."""
    u, v = check_tube(G, u), check_tube(G, v)
    if u < v or v < u:
        return True
    return not G.is_connected(u | v)


def all_tubes(G: SimpleGraph) -> list[frozenset]:
    return [frozenset(s) for r in range(1, G.n + 1)
            for s in itertools.combinations(range(1, G.n + 1), r) if G.is_connected(s)]


@dataclass(frozen=True)
class Tubing:
    tubes: frozenset

    def __post_init__(self):
        object.__setattr__(self, "tubes", frozenset(frozenset(t) for t in self.tubes))

    def __len__(self):
        return len(self.tubes)

    def sorted_tubes(self) -> list[frozenset]:
        return sorted(self.tubes, key=lambda t: (len(t), sorted(t)))

    def outermost(self, tube) -> frozenset:
        """Nodes of ``tube`` lying in no smaller tube of this tubing."""
        tube = frozenset(tube)
        inner = set()
        for t in self.tubes:
            if t < tube:
                inner |= t
        return tube - inner

    def encode(self) -> str:
        return "".join("{" + ",".join(map(str, sorted(t))) + "}" for t in self.sorted_tubes())

    def __str__(self):
        return self.encode()


def is_tubing(G: SimpleGraph, tubing: Tubing) -> bool:
    if G.nodes not in tubing.tubes:
        return False
    try:
        return all(compatible(u, v, G) for u, v in itertools.combinations(tubing.tubes, 2))
    except ValueError:
        return False


def maximal_tubings(G: SimpleGraph, bound: int = 8) -> list[Tubing]:
    """All n-tubings, sorted by encoding.

    A maximal tubing is fixed by the outermost node v of the universal tube
    together with maximal tubings of the components of G - v.
    """
    if G.n > bound:
        raise ValueError(f"maximal tubings are enumerated up to {bound} nodes")

    @lru_cache(maxsize=None)
    def tubings_of(nodes: frozenset) -> tuple:
        out = []
        for v in sorted(nodes):
            parts = [tubings_of(c) for c in G.components(nodes - {v})]
            for choice in itertools.product(*parts):
                tubes = {nodes}
                for sub in choice:
                    tubes |= sub
                out.append(frozenset(tubes))
        return tuple(out)

    found = [Tubing(ts) for ts in tubings_of(G.nodes)]
    return sorted(found, key=Tubing.encode)


def _check_maximal(G, T):
    if len(T) != G.n or not is_tubing(G, T):
        raise ValueError(f"{T.encode()} is not a maximal tubing")


def tubing_covers(T: Tubing, T2: Tubing, G: SimpleGraph) -> bool:
    """True when ``T`` covers ``T2``: one tube differs and T's outermost node is larger."""
    _check_maximal(G, T)
    _check_maximal(G, T2)
    mine, theirs = T.tubes - T2.tubes, T2.tubes - T.tubes
    if len(mine) != 1 or len(theirs) != 1:
        return False
    (u,), (u2,) = mine, theirs
    return max(T.outermost(u)) > max(T2.outermost(u2))


def _flip_pairs(G: SimpleGraph, tubings: list[Tubing]):
    """Pairs of maximal tubings differing in exactly one tube."""
    by_rest: dict = {}
    for T in tubings:
        for u in T.tubes:
            if u != G.nodes:
                by_rest.setdefault(T.tubes - {u}, []).append(T)
    for group in by_rest.values():
        yield from itertools.combinations(group, 2)


def tubing_edges(G: SimpleGraph, bound: int = 8) -> list[tuple[Tubing, Tubing]]:
    """Covering pairs ``(lower, upper)`` of the tubing order."""
    out = []
    for A, B in _flip_pairs(G, maximal_tubings(G, bound)):
        out.append((B, A) if tubing_covers(A, B, G) else (A, B))
    return out


def tubing_poset(G: SimpleGraph, bound: int = 8) -> FinitePoset:
    """Poset generated by the tubing covers; raises PosetError on a cycle or a redundant cover."""
    return FinitePoset(maximal_tubings(G, bound), tubing_edges(G, bound))


def tubing_to_permutation(T: Tubing, G: SimpleGraph) -> Permutation:
    """``w(i)`` is the size rank of the smallest tube containing node i (complete graphs)."""
    if len(G.edges) != G.n * (G.n - 1) // 2:
        raise ValueError("the permutation bijection needs a complete graph")
    _check_maximal(G, T)
    ranked = T.sorted_tubes()
    return Permutation(next(k for k, t in enumerate(ranked, start=1) if i in t)
                       for i in range(1, G.n + 1))


def permutation_to_tubing(w, G: SimpleGraph) -> Tubing:
    w = Permutation(w)
    if len(w) != G.n:
        raise ValueError("permutation and graph sizes differ")
    return Tubing(frozenset(frozenset(i for i in range(1, G.n + 1) if w[i - 1] <= k)
                            for k in range(1, G.n + 1)))


@dataclass
class LatticeReport:
    graph: str
    elements: int
    covers: int
    is_lattice: bool
    counterexample: tuple | None

    def lines(self) -> list[str]:
        out = [f"graph: {self.graph}", f"maximal tubings: {self.elements}",
               f"covers: {self.covers}", f"lattice: {'yes' if self.is_lattice else 'no'}"]
        if self.counterexample:
            a, b, kind = self.counterexample
            out.append(f"no {kind} for {a.encode()} and {b.encode()}")
        return out


def lattice_report(G: SimpleGraph, bound: int = 8) -> LatticeReport:
    P = tubing_poset(G, bound)
    cx = P.lattice_counterexample()
    return LatticeReport(G.name, len(P), len(P.covers), cx is None, cx)
