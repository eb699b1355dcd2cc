"""Brute-force generators used as independent oracles.

Nothing in here imports treelattices. Trees are handled as encoding strings
("." for a leaf, "(LR)" for a node) and built from Dyck words, so every count
and relation below comes from a different code path than the package.
"""

from __future__ import annotations

import itertools
from math import comb


def _dyck_words(n):
    for bits in itertools.product((1, 0), repeat=2 * n):
        depth = 0
        for b in bits:
            depth += 1 if b else -1
            if depth < 0:
                break
        else:
            if depth == 0:
                yield bits


def _tree_from_dyck(word):
    # w = 1 A 0 B  <->  node(A, B)
    if not word:
        return "."
    depth = 0
    for i, b in enumerate(word):
        depth += 1 if b else -1
        if depth == 0:
            return "(" + _tree_from_dyck(word[1:i]) + _tree_from_dyck(word[i + 1:]) + ")"
    raise ValueError(word)


def binary_trees(n):
    return sorted({_tree_from_dyck(w) for w in _dyck_words(n)})


def catalan(n):
    c = [1]
    for m in range(1, n + 1):
        c.append(sum(c[i] * c[m - 1 - i] for i in range(m)))
    return c[n]


def node_structure(enc):
    """Return (parent, right_size) for a tree encoding; nodes are 1-based in-order.

    parent[i] == 0 marks the root.
    """
    pos = 0
    counter = [0]
    parent = {}
    right_size = {}

    def walk():
        nonlocal pos
        if enc[pos] == ".":
            pos += 1
            return None, 0
        pos += 1
        left, lsize = walk()
        counter[0] += 1
        me = counter[0]
        right, rsize = walk()
        pos += 1
        for child in (left, right):
            if child is not None:
                parent[child] = me
        right_size[me] = rsize
        return me, lsize + rsize + 1

    root, _ = walk()
    if root is not None:
        parent[root] = 0
    return parent, right_size


def ancestors(parent, i):
    out = set()
    while parent[i]:
        i = parent[i]
        out.add(i)
    return out


def upper_ideals(enc):
    parent, _ = node_structure(enc)
    nodes = sorted(parent)
    for r in range(len(nodes) + 1):
        for sub in itertools.combinations(nodes, r):
            s = set(sub)
            if all(ancestors(parent, x) <= s for x in s):
                yield frozenset(s)


def bileveled_pairs(n):
    out = []
    for enc in binary_trees(n):
        parent, _ = node_structure(enc)
        for ideal in upper_ideals(enc):
            if 1 not in ideal:
                continue
            below_one = {x for x in parent if 1 in ancestors(parent, x)}
            if ideal & below_one:
                continue
            out.append((enc, ideal))
    return out


def painted_count(nodes):
    return sum(1 for enc in binary_trees(nodes) for _ in upper_ideals(enc))


def compo_count(n):
    return sum(catalan(j) * comb(n - 1, j) for j in range(n))


def tamari_leq(a, b):
    """Bracket-vector comparison: right-subtree sizes grow under right rotation."""
    _, ra = node_structure(a)
    _, rb = node_structure(b)
    return all(ra[i] <= rb[i] for i in ra)


def inversions(w):
    pos = {v: i for i, v in enumerate(w)}
    return {(a, b) for a in pos for b in pos if a < b and pos[b] < pos[a]}


def weak_leq(u, v):
    return inversions(u) <= inversions(v)


def descents(w):
    return {i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]}


def mobius_brute(elements, leq, a, b):
    if not leq(a, b):
        return 0
    if a == b:
        return 1
    return -sum(mobius_brute(elements, leq, a, s)
                for s in elements if leq(a, s) and leq(s, b) and s != b)


def _connected(nodes, edges):
    nodes = set(nodes)
    if not nodes:
        return False
    seen = {min(nodes)}
    stack = [min(nodes)]
    while stack:
        x = stack.pop()
        for u, v in edges:
            for p, q in ((u, v), (v, u)):
                if p == x and q in nodes and q not in seen:
                    seen.add(q)
                    stack.append(q)
    return seen == nodes


def brute_maximal_tubings(n, edges):
    universe = range(1, n + 1)
    tubes = [frozenset(s) for r in range(1, n + 1)
             for s in itertools.combinations(universe, r) if _connected(s, edges)]
    full = frozenset(universe)
    proper = [t for t in tubes if t != full]

    def compatible(u, v):
        if u < v or v < u:
            return True
        union = u | v
        adjacent = any((a in u and b in v) or (a in v and b in u) for a, b in edges)
        return not _connected(union, edges) or (not adjacent and not (u & v))

    out = []
    for combo in itertools.combinations(proper, n - 1):
        if all(compatible(u, v) for u, v in itertools.combinations(combo, 2)):
            out.append(frozenset(combo) | {full})
    return out


def left_weak_leq(u, v):
    """Weak order whose covers swap adjacent values: compare inversions of the inverses."""
    inv = lambda w: tuple(sorted(range(1, len(w) + 1), key=lambda i: w[i - 1]))  # noqa: E731
    return inversions(inv(u)) <= inversions(inv(v))
