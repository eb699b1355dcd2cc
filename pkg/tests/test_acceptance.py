"""Acceptance criteria 1..9, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v``; the lines are printed even
when output capture is on.
"""

import math
import subprocess
import sys

import pytest

import oracles
from treelattices import golden
from treelattices.orders import build
from treelattices.posets import FinitePoset, PosetMap, verify_interval_retract
from treelattices.projections import as_poset_map, descents, loday_ronco, theta
from treelattices.trees import permutations
from treelattices.tubings import graph_family


def report(capsys, result):
    with capsys.disabled():
        print("\n" + result.line())
        for line in result.details:
            if line.startswith("FAIL"):
                print("    " + line)
    assert result.passed, "\n".join(result.details)


def test_criterion_1_counts(capsys):
    result = golden.criterion_counts()
    independent = {
        "tamari": tuple(oracles.catalan(n) for n in range(1, 6)),
        "weak": tuple(math.factorial(n) for n in range(1, 6)),
        "multi": tuple(len(oracles.bileveled_pairs(n)) for n in range(1, 6)),
        "compo": tuple(oracles.compo_count(n) for n in range(1, 6)),
        "boolean": tuple(2 ** m for m in range(1, 6)),
    }
    for fam, counts in independent.items():
        ok = counts == golden.EXPECTED_COUNTS[fam]
        result.passed &= ok
        result.details.append(f"{'ok  ' if ok else 'FAIL'} oracle agrees for {fam}")
    report(capsys, result)


def test_criterion_2_lattices(capsys):
    report(capsys, golden.criterion_lattices())


def test_criterion_3_join_meet(capsys):
    report(capsys, golden.criterion_join_meet())


def test_criterion_4_retracts(capsys):
    report(capsys, golden.criterion_retracts())


def test_criterion_5_gamma_fibers(capsys):
    report(capsys, golden.criterion_gamma_fibers())


def test_criterion_6_coherence(capsys):
    result = golden.criterion_coherence()
    # descents also checked against the brute-force oracle
    ok = all(loday_ronco(theta(w)).members == oracles.descents(w) == descents(w).members
             for n in range(1, 6) for w in permutations(n))
    result.passed &= ok
    result.details.append(f"{'ok  ' if ok else 'FAIL'} descents agree with the oracle")
    report(capsys, result)


def test_criterion_7_coalgebra(capsys):
    report(capsys, golden.criterion_coalgebra())


def test_criterion_8_tubings(capsys):
    result = golden.criterion_tubings()
    for fam in ("cycle", "star"):
        brute = oracles.brute_maximal_tubings(4, sorted(graph_family(fam, 4).edges))
        ok = len(brute) == {"cycle": golden.CYCLE4[0], "star": golden.STAR4[0]}[fam]
        result.passed &= ok
        result.details.append(f"{'ok  ' if ok else 'FAIL'} brute force agrees for {fam}-4")
    report(capsys, result)


def test_criterion_9_determinism(capsys):
    cmd = [sys.executable, "-m", "treelattices", "golden", "--format", "json"]
    runs = [subprocess.run(cmd, capture_output=True, check=False) for _ in range(2)]
    ok = all(r.returncode == 0 for r in runs) and runs[0].stdout == runs[1].stdout
    result = golden.CriterionResult(9, "byte-identical output across runs", ok,
                                    [f"{'ok  ' if ok else 'FAIL'} two processes, {len(runs[0].stdout)} bytes"])
    report(capsys, result)


def _drop_cover(P: FinitePoset, k: int) -> FinitePoset:
    covers = [c for i, c in enumerate(sorted(P.covers, key=lambda ab: (P.index[ab[0]], P.index[ab[1]])))
              if i != k]
    return FinitePoset(P.elements, covers)


def _retract_survives(broken, proj, sect):
    f, g = as_poset_map(proj, 4), as_poset_map(sect, 4)
    f2 = PosetMap(broken, f.target, f.assignment, name=proj)
    g2 = PosetMap(g.source, broken, g.assignment, name=sect)
    return verify_interval_retract(f2, g2).passed


@pytest.mark.parametrize("k", range(32))
def test_mutated_m4_is_detected(k):
    # removing any single cover of M_4 breaks the lattice property or one of the retracts out of it
    broken = _drop_cover(build("multi", 4).poset, k)
    assert not (broken.is_lattice()
                and _retract_survives(broken, "gamma", "gamma_section")
                and _retract_survives(broken, "varphi", "varphi_section"))
