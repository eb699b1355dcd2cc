"""The acceptance suite: every headline check in one deterministic report."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import coalgebra as co
from .orders import build, multi_join, multi_meet
from .posets import are_isomorphic
from .projections import (
    REGISTRY,
    as_poset_map,
    descents,
    gamma,
    hat_gamma,
    hat_varphi,
    loday_ronco,
    theta,
    varphi,
    verify_retract,
)
from .trees import (
    LEAF,
    PaintedTree,
    Permutation,
    bij2,
    bij3_inverse,
    binary_trees,
    encode,
    painted_trees,
    permutations,
)
from .tubings import (
    graph_family,
    lattice_report,
    maximal_tubings,
    permutation_to_tubing,
    tubing_covers,
    tubing_poset,
    tubing_to_permutation,
)

EXPECTED_COUNTS = {
    "tamari": (1, 2, 5, 14, 42),
    "weak": (1, 2, 6, 24, 120),
    "multi": (1, 2, 6, 21, 80),
    "compo": (1, 2, 5, 15, 51),
    "boolean": (2, 4, 8, 16, 32),
}

LATTICE_RANKS = {"tamari": 7, "weak": 5, "multi": 5, "compo": 5, "boolean": 10}

# regression values from exhaustive computation
CYCLE4 = (20, 30)
STAR4 = (16, 24, True)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    details: list[str] = field(default_factory=list)

    def line(self) -> str:
        return f"criterion {self.number}: {'PASS' if self.passed else 'FAIL'}  {self.title}"


def _check(details: list, ok: bool, text: str) -> bool:
    details.append(("ok   " if ok else "FAIL ") + text)
    return ok


def criterion_counts() -> CriterionResult:
    d: list[str] = []
    ok = True
    for fam, expected in EXPECTED_COUNTS.items():
        got = tuple(len(build(fam, r)) for r in range(1, 6))
        ok &= _check(d, got == expected, f"{fam} 1..5: {' '.join(map(str, got))}")
    return CriterionResult(1, "enumeration counts", ok, d)


def criterion_lattices() -> CriterionResult:
    d: list[str] = []
    ok = True
    for fam, top in LATTICE_RANKS.items():
        lowest = 0 if fam in ("tamari", "weak", "boolean") else 1
        for r in range(lowest, top + 1):
            cx = build(fam, r).poset.lattice_counterexample()
            ok &= _check(d, cx is None, f"{fam} {r} is a lattice")
    return CriterionResult(2, "lattice verification", ok, d)


def criterion_join_meet() -> CriterionResult:
    d: list[str] = []
    ok = True
    for r in (4, 5):
        P = build("multi", r).poset
        bad = [(a, b) for a in P for b in P
               if multi_join(a, b) != P.join(a, b) or multi_meet(a, b) != P.meet(a, b)]
        msg = f"M_{r}: {len(P) ** 2} pairs"
        if bad:
            msg += f", first mismatch {encode(bad[0][0])} {encode(bad[0][1])}"
        ok &= _check(d, not bad, msg)
    return CriterionResult(3, "bi-leveled join and meet formulas", ok, d)


def criterion_retracts() -> CriterionResult:
    d: list[str] = []
    ok = True
    for name in ("gamma", "varphi", "hat_varphi", "hat_gamma"):
        for r in range(1, 6):
            rep, mob = verify_retract(name, r)
            text = f"{name} rank {r}: retract {'pass' if rep.passed else 'FAIL'}, " \
                   f"moebius {mob.pairs_checked} pairs {'pass' if mob.passed else 'FAIL'}"
            ok &= _check(d, rep.passed and mob.passed, text)
            if not rep.passed:
                d.extend("     " + line for line in rep.lines())
    return CriterionResult(4, "interval retracts and the Moebius sum", ok, d)


def criterion_gamma_fibers() -> CriterionResult:
    d: list[str] = []
    ok = True
    for r in (4, 5):
        f = as_poset_map("gamma", r)
        good = 0
        for t, fiber in f.fibers().items():
            k = len(bij3_inverse(t))
            if f.source.is_interval(fiber) and are_isomorphic(f.source.subposet(fiber),
                                                              build("tamari", k - 1).poset):
                good += 1
        ok &= _check(d, good == len(f.target), f"Y_{r}: {good}/{len(f.target)} fibers are Tamari intervals")
    return CriterionResult(5, "gamma fibers are Tamari lattices", ok, d)


def criterion_coherence() -> CriterionResult:
    d: list[str] = []
    ok = True
    for n in range(1, 6):
        image = {theta(w) for w in permutations(n)}
        ok &= _check(d, image == set(binary_trees(n)), f"theta onto Y_{n}")
        same = all(loday_ronco(theta(w)) == descents(w) for w in permutations(n))
        ok &= _check(d, same, f"loday_ronco after theta equals descents on S_{n}")
        P = build("multi", n).poset
        square = all(hat_gamma(varphi(bij2(b))) == hat_varphi(gamma(bij2(b))) for b in P)
        ok &= _check(d, square, f"hat_gamma*varphi = hat_varphi*gamma on M_{n}")
    beta = REGISTRY["beta"].func
    differ = [w for w in permutations(4) if descents(w) != hat_varphi(gamma(bij2(beta(w))))]
    msg = f"S_4 composites differ on {len(differ)} permutations"
    if differ:
        msg += f", e.g. {encode(differ[0])}"
    ok &= _check(d, bool(differ), msg)
    return CriterionResult(6, "classical map coherence", ok, d)


def _primitive_dimension(n: int) -> int:
    """Dimension of the primitive space of YSym in degree n, by exact rank."""
    basis = binary_trees(n)
    one = co.LinearCombination.basis(LEAF)
    columns = []
    for t in basis:
        x = co.LinearCombination.basis(t)
        columns.append(co.coproduct_ysym(x) - co.tensor(one, x) - co.tensor(x, one))
    keys = sorted({k for c in columns for k in c}, key=co._key_text)
    if not keys:
        return len(basis)
    A = np.array([[c.get(k, 0) for c in columns] for k in keys], dtype=np.int64)
    return len(basis) - int(np.linalg.matrix_rank(A))


def criterion_coalgebra() -> CriterionResult:
    d: list[str] = []
    ok = True
    for name, delta, keys in (
        ("YSym", co.coproduct_ysym, [t for n in range(6) for t in binary_trees(n)]),
        ("PSym", co.coproduct_psym, [p for n in range(6) for p in painted_trees(n)]),
    ):
        coassoc = all(not co.coassociativity_defect(delta, co.LinearCombination.basis(k)) for k in keys)
        ok &= _check(d, coassoc, f"{name} coassociative on {len(keys)} basis elements of degree <= 5")
        counit = all(not any(co.counit_defect(delta, co.LinearCombination.basis(k))) for k in keys)
        ok &= _check(d, counit, f"{name} counit law on {len(keys)} basis elements of degree <= 5")
    trees = binary_trees(4)
    match = all(co.is_primitive(co.m_basis(t), co.coproduct_ysym, LEAF) == co.is_progressive(t) for t in trees)
    progressive = sum(co.is_progressive(t) for t in trees)
    ok &= _check(d, match, f"Y_4: primitive M_t are exactly the {progressive} progressive trees")
    dim = _primitive_dimension(4)
    ok &= _check(d, dim == progressive, f"Y_4: primitive space has dimension {dim}")
    records = co.psym_primitives(3)
    sources = sorted({r.source for r in records})
    all_ok = all(r.verified for r in records)
    ok &= _check(d, all_ok and len(sources) == 3,
                 f"M_4: {len(records)} inversions over {len(sources)} subintervals are primitive")
    return CriterionResult(7, "coalgebra laws and primitives", ok, d)


def criterion_tubings() -> CriterionResult:
    d: list[str] = []
    ok = True
    K4 = graph_family("complete", 4)
    P = tubing_poset(K4)
    W = build("weak", 4).poset
    to_perm = {T: tubing_to_permutation(T, K4) for T in P}
    bijective = sorted(to_perm.values()) == sorted(W.elements)
    covers_match = {(to_perm[a], to_perm[b]) for a, b in P.covers} == set(W.covers)
    ok &= _check(d, bijective and covers_match, "K_4 tubings map isomorphically onto the weak order on S_4")
    low = permutation_to_tubing(Permutation((3, 1, 2, 4)), K4)
    high = permutation_to_tubing(Permutation((4, 1, 2, 3)), K4)
    ok &= _check(d, tubing_covers(high, low, K4), f"{low.encode()} is covered by {high.encode()}")
    for n in range(1, 6):
        iso = are_isomorphic(tubing_poset(graph_family("path", n)), build("tamari", n).poset)
        ok &= _check(d, iso, f"path-{n} tubings are isomorphic to Y_{n}")
    C4 = tubing_poset(graph_family("cycle", 4))
    ok &= _check(d, (len(C4), len(C4.covers)) == CYCLE4,
                 f"cycle-4: {len(C4)} tubings, {len(C4.covers)} covers")
    for fam, expected in (("cycle", (CYCLE4[0], CYCLE4[1], True)), ("star", STAR4)):
        rep = lattice_report(graph_family(fam, 4))
        got = (rep.elements, rep.covers, rep.is_lattice)
        ok &= _check(d, got == expected, f"{fam}-4 lattice report: " + "; ".join(rep.lines()[1:]))
    return CriterionResult(8, "graph associahedra", ok, d)


CRITERIA: list[Callable[[], CriterionResult]] = [
    criterion_counts,
    criterion_lattices,
    criterion_join_meet,
    criterion_retracts,
    criterion_gamma_fibers,
    criterion_coherence,
    criterion_coalgebra,
    criterion_tubings,
]


def golden_suite() -> list[CriterionResult]:
    """Run criteria 1..8. Determinism (criterion 9) compares two renderings of this."""
    return [c() for c in CRITERIA]


def render(results: list[CriterionResult], fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps([{"criterion": r.number, "title": r.title, "passed": r.passed,
                            "details": r.details} for r in results], indent=2)
    lines = []
    for r in results:
        lines.append(r.line())
        lines.extend("    " + x for x in r.details)
    return "\n".join(lines)


def determinism_check(runs: int = 2) -> CriterionResult:
    outputs = [render(golden_suite(), "json") for _ in range(runs)]
    same = all(o == outputs[0] for o in outputs)
    return CriterionResult(9, "byte-identical output across runs", same,
                           [f"{'ok  ' if same else 'FAIL'} {runs} runs, {len(outputs[0].encode())} bytes each"])
