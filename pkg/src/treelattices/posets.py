"""Finite posets given by their Hasse diagrams.

Elements are arbitrary hashable keys. Internally a poset stores its elements in
a linear extension (ties broken by input order) together with a boolean
reachability matrix ``up`` where ``up[i, j]`` means ``elements[i] <= elements[j]``.
Everything is exact; the only floating point use is a unit-triangular solve
whose integer result is verified before it is returned.
"""

from __future__ import annotations

import heapq
import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Mapping

import numpy as np
from scipy.linalg import solve_triangular

from .trees import encode


class PosetError(ValueError):
    """Raised when covers do not describe a partial order."""


class FinitePoset:
    def __init__(self, elements: Iterable[Hashable], covers: Iterable[tuple], *, reduce: bool = False):
        """Build from covering pairs ``(a, b)`` meaning ``a`` is covered by ``b``.

        With ``reduce=False`` the pairs must already be the transitive
        reduction; with ``reduce=True`` any generating relation is accepted.
        """
        given = list(elements)
        if len(set(given)) != len(given):
            raise PosetError("duplicate elements")
        pos = {x: i for i, x in enumerate(given)}
        pairs = set()
        for a, b in covers:
            if a not in pos or b not in pos:
                raise PosetError(f"cover ({a!r}, {b!r}) mentions an unknown element")
            if a == b:
                raise PosetError(f"loop at {a!r}")
            pairs.add((pos[a], pos[b]))

        # Kahn's algorithm; smallest input index first keeps the order stable
        succ = defaultdict(list)
        indeg = [0] * len(given)
        for a, b in pairs:
            succ[a].append(b)
            indeg[b] += 1
        heap = [i for i, d in enumerate(indeg) if d == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            i = heapq.heappop(heap)
            order.append(i)
            for j in succ[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    heapq.heappush(heap, j)
        if len(order) != len(given):
            raise PosetError("the covering relation has a cycle")

        self.elements: tuple = tuple(given[i] for i in order)
        self.index: dict = {x: k for k, x in enumerate(self.elements)}
        n = len(self.elements)
        relabel = {old: new for new, old in enumerate(order)}
        edges = sorted((relabel[a], relabel[b]) for a, b in pairs)

        up = np.eye(n, dtype=bool)
        upper = defaultdict(list)
        for a, b in edges:
            upper[a].append(b)
        for a in range(n - 1, -1, -1):
            for b in upper[a]:
                up[a] |= up[b]
        self.up = up
        self.up.setflags(write=False)

        hasse = self._reduction()
        if not reduce and set(edges) != hasse:
            extra = sorted(set(edges) - hasse)[0]
            raise PosetError(f"({self.elements[extra[0]]!r}, {self.elements[extra[1]]!r}) "
                             "is implied by other covers")
        self._cover_idx = tuple(sorted(hasse))
        self._mobius = None
        self._mobius_cache: dict = {}

    @classmethod
    def from_relation(cls, elements: Iterable[Hashable], leq: Callable[[Hashable, Hashable], bool]) -> FinitePoset:
        """Build from a <= oracle; covers come from the transitive reduction."""
        elements = list(elements)
        n = len(elements)
        rel = np.zeros((n, n), dtype=bool)
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                rel[i, j] = i == j or bool(leq(a, b))
        if not rel.diagonal().all():
            raise PosetError("relation is not reflexive")
        strict = rel & ~np.eye(n, dtype=bool)
        if (strict & strict.T).any():
            i, j = map(int, np.argwhere(strict & strict.T)[0])
            raise PosetError(f"relation is not antisymmetric at {elements[i]!r}, {elements[j]!r}")
        r = strict.astype(np.float64)
        if ((r @ r > 0) & ~strict).any():
            raise PosetError("relation is not transitive")
        covers_mask = strict & ~(r @ r > 0)
        covers = [(elements[i], elements[j]) for i, j in np.argwhere(covers_mask)]
        return cls(elements, covers)

    # --- basic structure -------------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    def __repr__(self):
        return f"FinitePoset({len(self)} elements, {len(self._cover_idx)} covers)"

    def _reduction(self) -> set:
        strict = self.up & ~np.eye(len(self), dtype=bool)
        r = strict.astype(np.float64)
        return {(int(i), int(j)) for i, j in np.argwhere(strict & ~(r @ r > 0))}

    def _idx(self, x) -> int:
        try:
            return self.index[x]
        except KeyError:
            raise KeyError(f"{x!r} is not an element of this poset") from None

    @property
    def covers(self) -> list[tuple]:
        return [(self.elements[i], self.elements[j]) for i, j in self._cover_idx]

    @property
    def cover_indices(self) -> tuple:
        return self._cover_idx

    def leq(self, a, b) -> bool:
        return bool(self.up[self._idx(a), self._idx(b)])

    def lt(self, a, b) -> bool:
        return a != b and self.leq(a, b)

    def upper_covers(self, a) -> list:
        i = self._idx(a)
        return [self.elements[j] for k, j in self._cover_idx if k == i]

    def lower_covers(self, a) -> list:
        j = self._idx(a)
        return [self.elements[i] for i, k in self._cover_idx if k == j]

    def minimal(self) -> list:
        return [x for k, x in enumerate(self.elements) if self.up[:, k].sum() == 1]

    def maximal(self) -> list:
        return [x for k, x in enumerate(self.elements) if self.up[k].sum() == 1]

    def subposet(self, keys: Iterable) -> FinitePoset:
        """Induced subposet on ``keys``."""
        keys = sorted(set(keys), key=self._idx)
        idx = [self._idx(k) for k in keys]
        sub = self.up[np.ix_(idx, idx)]
        strict = sub & ~np.eye(len(idx), dtype=bool)
        r = strict.astype(np.float64)
        cov = strict & ~(r @ r > 0)
        return FinitePoset(keys, [(keys[i], keys[j]) for i, j in np.argwhere(cov)])

    # --- joins, meets, lattices ------------------------------------------------

    def join(self, a, b):
        """Least upper bound, or ``None`` when it does not exist."""
        ub = self.up[self._idx(a)] & self.up[self._idx(b)]
        if not ub.any():
            return None
        c = int(np.argmax(ub))  # first in the linear extension, hence minimal
        return self.elements[c] if not (ub & ~self.up[c]).any() else None

    def meet(self, a, b):
        """Greatest lower bound, or ``None`` when it does not exist."""
        lb = self.up[:, self._idx(a)] & self.up[:, self._idx(b)]
        if not lb.any():
            return None
        c = len(self) - 1 - int(np.argmax(lb[::-1]))
        return self.elements[c] if not (lb & ~self.up[:, c]).any() else None

    def lattice_counterexample(self):
        """``None`` for a lattice, else ``(a, b, "join" | "meet")`` for a failing pair."""
        n = len(self)
        if n == 0:
            return None
        for mat, kind in ((self.up, "join"), (self.up.T[::-1, ::-1], "meet")):
            for i in range(n):
                bounds = mat[i] & mat  # row j: common bounds of i and j
                first = np.argmax(bounds, axis=1)
                has = bounds.any(axis=1)
                ok = has & ~(bounds & ~mat[first]).any(axis=1)
                if not ok.all():
                    j = int(np.argmin(ok))
                    if kind == "meet":
                        i, j = n - 1 - i, n - 1 - j
                    return self.elements[i], self.elements[j], kind
        return None

    def is_lattice(self) -> bool:
        return self.lattice_counterexample() is None

    # --- Moebius function ------------------------------------------------------

    def mobius(self, a, b) -> int:
        """Moebius value by the defining recursion, memoized per source element."""
        i, j = self._idx(a), self._idx(b)
        if not self.up[i, j]:
            return 0
        row = self._mobius_cache.get(i)
        if row is None:
            row = {i: 1}
            targets = np.flatnonzero(self.up[i])
            for k in targets[1:]:  # linear-extension order
                below = np.flatnonzero(self.up[i] & self.up[:, k])
                row[int(k)] = -sum(row[int(s)] for s in below if s != k)
            self._mobius_cache[i] = row
        return row[j]

    def mobius_matrix(self) -> np.ndarray:
        """Integer matrix of the Moebius function, indexed like ``elements``.

        Computed as the inverse of the unit upper triangular zeta matrix and
        checked exactly.
        """
        if self._mobius is None:
            n = len(self)
            zeta = self.up.astype(np.float64)
            inv = solve_triangular(zeta, np.eye(n), unit_diagonal=True, lower=False)
            mu = np.rint(inv).astype(np.int64)
            if not (np.abs(inv - mu) == 0).all() or np.abs(mu).max(initial=0) >= 2 ** 40:
                raise ArithmeticError("Moebius inversion left the exact integer range")
            zi = self.up.astype(np.int64)
            if not (zi @ mu == np.eye(n, dtype=np.int64)).all():
                raise ArithmeticError("Moebius matrix failed the zeta check")
            mu.setflags(write=False)
            self._mobius = mu
        return self._mobius

    # --- intervals --------------------------------------------------------------

    def interval_elements(self, a, b) -> list:
        mask = self.up[self._idx(a)] & self.up[:, self._idx(b)]
        return [self.elements[k] for k in np.flatnonzero(mask)]

    def interval(self, a, b) -> FinitePoset:
        if not self.leq(a, b):
            raise ValueError(f"{a!r} is not below {b!r}")
        return self.subposet(self.interval_elements(a, b))

    def is_interval(self, keys: Iterable) -> bool:
        keys = set(keys)
        if not keys:
            raise ValueError("the empty set is not tested for being an interval")
        idx = np.array(sorted(self._idx(k) for k in keys))
        mask = np.zeros(len(self), dtype=bool)
        mask[idx] = True
        lo, hi = int(idx[0]), int(idx[-1])
        # lo/hi are the only candidates for a minimum/maximum
        if not (self.up[lo] & mask).sum() == len(idx) or not (self.up[:, hi] & mask).sum() == len(idx):
            return False
        return bool(((self.up[lo] & self.up[:, hi]) == mask).all())

    # --- export -------------------------------------------------------------------

    def to_dot(self, labeler: Callable = encode, name: str = "hasse") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontname=monospace];"]
        for k, x in enumerate(self.elements):
            label = str(labeler(x)).replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  n{k} [label="{label}"];')
        for i, j in self._cover_idx:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self, labeler: Callable = encode) -> str:
        return json.dumps({"elements": [labeler(x) for x in self.elements],
                           "covers": [[i, j] for i, j in self._cover_idx]})


def chain(n: int) -> FinitePoset:
    return FinitePoset(range(n), [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> FinitePoset:
    return FinitePoset(range(n), [])


# --- isomorphism -----------------------------------------------------------------

def _canonical_colours(P: FinitePoset) -> list:
    n = len(P)
    ups, downs = defaultdict(list), defaultdict(list)
    for i, j in P.cover_indices:
        ups[i].append(j)
        downs[j].append(i)
    height = [0] * n
    for i in range(n):
        for j in ups[i]:
            height[j] = max(height[j], height[i] + 1)
    sig = [(int(P.up[k].sum()), int(P.up[:, k].sum()), len(ups[k]), len(downs[k]), height[k])
           for k in range(n)]
    for _ in range(n):
        new = [(sig[k], tuple(sorted(sig[j] for j in ups[k])), tuple(sorted(sig[j] for j in downs[k])))
               for k in range(n)]
        if len(set(new)) == len(set(sig)):
            return new
        sig = new
    return sig


def find_isomorphism(P: FinitePoset, Q: FinitePoset, bound: int = 200) -> dict | None:
    """An order isomorphism ``P -> Q`` as a dict, or ``None``."""
    if max(len(P), len(Q)) > bound:
        raise ValueError(f"isomorphism search is limited to {bound} elements")
    if len(P) != len(Q) or len(P.cover_indices) != len(Q.cover_indices):
        return None
    cp, cq = _canonical_colours(P), _canonical_colours(Q)
    if sorted(map(repr, cp)) != sorted(map(repr, cq)):
        return None
    n = len(P)
    by_colour = defaultdict(list)
    for k in range(n):
        by_colour[repr(cq[k])].append(k)
    # rarest colour classes first, then the linear extension
    order = sorted(range(n), key=lambda k: (len(by_colour[repr(cp[k])]), k))
    assign: dict[int, int] = {}
    used = set()

    def extend(pos):
        if pos == n:
            return True
        p = order[pos]
        for q in by_colour[repr(cp[p])]:
            if q in used:
                continue
            if all(P.up[p, p2] == Q.up[q, q2] and P.up[p2, p] == Q.up[q2, q] for p2, q2 in assign.items()):
                assign[p] = q
                used.add(q)
                if extend(pos + 1):
                    return True
                del assign[p]
                used.discard(q)
        return False

    if not extend(0):
        return None
    return {P.elements[p]: Q.elements[q] for p, q in assign.items()}


def are_isomorphic(P: FinitePoset, Q: FinitePoset, bound: int = 200) -> bool:
    return find_isomorphism(P, Q, bound) is not None


# --- poset maps and interval retracts -----------------------------------------------

@dataclass(frozen=True)
class PosetMap:
    source: FinitePoset
    target: FinitePoset
    assignment: Mapping
    name: str = ""

    def __post_init__(self):
        missing = [x for x in self.source if x not in self.assignment]
        if missing:
            raise ValueError(f"map {self.name!r} is undefined at {missing[0]!r}")
        stray = [y for y in self.assignment.values() if y not in self.target]
        if stray:
            raise ValueError(f"map {self.name!r} hits {stray[0]!r}, which is not in the target")

    def __call__(self, x):
        return self.assignment[x]

    def image(self) -> set:
        return set(self.assignment.values())

    def fibers(self) -> dict:
        out = {y: [] for y in self.target}
        for x in self.source:
            out[self.assignment[x]].append(x)
        return out

    def order_violation(self):
        """First cover ``a < b`` of the source with ``f(a) <= f(b)`` failing, else ``None``."""
        for a, b in self.source.covers:
            if not self.target.leq(self.assignment[a], self.assignment[b]):
                return a, b
        return None

    def compose(self, other: PosetMap) -> PosetMap:
        """``self`` after ``other``."""
        return PosetMap(other.source, self.target,
                        {x: self.assignment[other.assignment[x]] for x in other.source},
                        name=f"{self.name}*{other.name}")


@dataclass
class RetractReport:
    surjective_order_preserving: bool
    fibers_are_intervals: bool
    section_order_preserving: bool
    section_is_right_inverse: bool
    counterexamples: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return (self.surjective_order_preserving and self.fibers_are_intervals
                and self.section_order_preserving and self.section_is_right_inverse)

    def lines(self, labeler: Callable = encode) -> list[str]:
        out = []
        for name in ("surjective_order_preserving", "fibers_are_intervals",
                     "section_order_preserving", "section_is_right_inverse"):
            ok = getattr(self, name)
            line = f"{name}: {'pass' if ok else 'FAIL'}"
            if not ok and name in self.counterexamples:
                line += "  counterexample: " + " ".join(labeler(x) for x in self.counterexamples[name])
            out.append(line)
        return out


def verify_interval_retract(f: PosetMap, g: PosetMap) -> RetractReport:
    cx = {}
    missed = [y for y in f.target if y not in f.image()]
    bad = f.order_violation()
    if missed:
        cx["surjective_order_preserving"] = (missed[0],)
    elif bad:
        cx["surjective_order_preserving"] = bad
    for y, fiber in f.fibers().items():
        if fiber and not f.source.is_interval(fiber):
            cx["fibers_are_intervals"] = (y,)
            break
    bad = g.order_violation()
    if bad:
        cx["section_order_preserving"] = bad
    for y in f.target:
        if f(g(y)) != y:
            cx["section_is_right_inverse"] = (y,)
            break
    return RetractReport(
        surjective_order_preserving="surjective_order_preserving" not in cx,
        fibers_are_intervals="fibers_are_intervals" not in cx,
        section_order_preserving="section_order_preserving" not in cx,
        section_is_right_inverse="section_is_right_inverse" not in cx,
        counterexamples=cx,
    )


@dataclass
class MobiusReport:
    pairs_checked: int
    violations: list

    @property
    def passed(self) -> bool:
        return not self.violations


def mobius_retract_identity(f: PosetMap) -> MobiusReport:
    """Check ``mu_Q(x, y) == sum of mu_P(a, b) over f(a) = x, f(b) = y`` for all x <= y."""
    P, Q = f.source, f.target
    F = np.zeros((len(P), len(Q)), dtype=np.int64)
    for a in P:
        F[P.index[a], Q.index[f(a)]] = 1
    pushed = F.T @ P.mobius_matrix() @ F
    muq = Q.mobius_matrix()
    bad = np.argwhere((pushed != muq) & Q.up)
    violations = [(Q.elements[i], Q.elements[j], int(muq[i, j]), int(pushed[i, j])) for i, j in bad]
    return MobiusReport(int(Q.up.sum()), violations)
