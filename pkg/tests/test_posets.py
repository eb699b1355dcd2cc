import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from treelattices.orders import build
from treelattices.posets import (
    FinitePoset,
    PosetError,
    PosetMap,
    antichain,
    are_isomorphic,
    chain,
    find_isomorphism,
    mobius_retract_identity,
    verify_interval_retract,
)
from treelattices.trees import encode, encode_tree


def diamond():
    return FinitePoset("0abc1", [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")])


def test_chain_and_antichain():
    C = chain(4)
    assert C.is_lattice() and C.mobius(0, 1) == -1 and C.mobius(0, 2) == 0
    A = antichain(2)
    assert not A.is_lattice()
    assert A.lattice_counterexample()[2] == "join"


def test_cycle_is_rejected():
    with pytest.raises(PosetError):
        FinitePoset("ab", [("a", "b"), ("b", "a")])


def test_redundant_cover_is_rejected_unless_reduced():
    covers = [("a", "b"), ("b", "c"), ("a", "c")]
    with pytest.raises(PosetError):
        FinitePoset("abc", covers)
    P = FinitePoset("abc", covers, reduce=True)
    assert len(P.covers) == 2


def test_unknown_cover_element():
    with pytest.raises(PosetError):
        FinitePoset("ab", [("a", "z")])


def test_diamond_mobius_and_lattice():
    D = diamond()
    assert D.mobius("0", "1") == 2
    assert D.join("a", "b") == "1" and D.meet("a", "b") == "0"
    assert D.is_lattice()


def test_non_lattice_bowtie():
    P = FinitePoset("abcd", [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
    a, b, kind = P.lattice_counterexample()
    assert kind in ("join", "meet")
    assert P.join("a", "b") is None


def test_mobius_matrix_inverts_zeta():
    for fam, r in (("tamari", 4), ("multi", 4), ("weak", 4)):
        P = build(fam, r).poset
        mu = P.mobius_matrix()
        zeta = P.up.astype(np.int64)
        assert (mu @ zeta == np.eye(len(P), dtype=np.int64)).all()


@pytest.mark.parametrize("n", range(1, 5))
def test_tamari_mobius_matches_brute_force(n):
    P = build("tamari", n).poset
    enc = {encode_tree(t): t for t in P}
    elems = list(enc)
    bottom = elems[0]
    for top in elems:
        want = oracles.mobius_brute(elems, oracles.tamari_leq, bottom, top) \
            if oracles.tamari_leq(bottom, top) else 0
        assert P.mobius(enc[bottom], enc[top]) == want


def test_intervals():
    P = build("tamari", 3).poset
    lo, hi = P.elements[0], P.elements[-1]
    assert P.is_interval(P.elements)
    assert P.interval(lo, hi).elements == P.elements
    with pytest.raises(ValueError):
        P.is_interval([])
    D = diamond()
    assert not D.is_interval(["a", "b"])
    assert D.is_interval(["a"])


def test_exports_are_stable():
    D = diamond()
    data = json.loads(D.to_json())
    assert data["elements"] == ["0", "a", "b", "c", "1"]
    assert len(data["covers"]) == 6 and D.to_json() == D.to_json()
    dot = D.to_dot(labeler=str)
    assert dot.startswith("digraph") and dot.count("->") == 6
    assert dot == D.to_dot(labeler=str)


def test_isomorphism():
    assert are_isomorphic(diamond(), FinitePoset("wxyzv", [("w", "x"), ("w", "y"), ("w", "z"),
                                                           ("x", "v"), ("y", "v"), ("z", "v")]))
    assert not are_isomorphic(diamond(), chain(5))
    iso = find_isomorphism(build("tamari", 3).poset, build("tamari", 3).poset)
    assert iso is not None


def test_boolean_poset_is_not_chain():
    assert not are_isomorphic(build("boolean", 2).poset, chain(4))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), max_size=12))
def test_random_orders(pairs):
    # any relation i < j on integers with i < j generates a poset
    covers = {(a, b) for a, b in pairs if a < b}
    P = FinitePoset(range(7), covers, reduce=True)
    for a, b in covers:
        assert P.leq(a, b)
    # the linear extension respects the order
    for i, x in enumerate(P.elements):
        for y in P.elements[:i]:
            assert not P.lt(x, y)
    mu = P.mobius_matrix()
    assert (mu @ P.up.astype(np.int64) == np.eye(7, dtype=np.int64)).all()


def test_retract_on_chain_collapse():
    P, Q = chain(4), chain(2)
    f = PosetMap(P, Q, {0: 0, 1: 0, 2: 1, 3: 1})
    g = PosetMap(Q, P, {0: 0, 1: 2})
    rep = verify_interval_retract(f, g)
    assert rep.passed
    assert mobius_retract_identity(f).passed


def test_retract_failure_is_reported():
    P, Q = chain(3), chain(2)
    f = PosetMap(P, Q, {0: 0, 1: 1, 2: 0})
    g = PosetMap(Q, P, {0: 0, 1: 1})
    rep = verify_interval_retract(f, g)
    assert not rep.passed and not rep.surjective_order_preserving
    assert any("FAIL" in line for line in rep.lines(labeler=str))


def test_posetmap_rejects_bad_assignment():
    with pytest.raises((ValueError, KeyError)):
        PosetMap(chain(2), chain(2), {0: 0, 1: 5})


def test_diamond_encodings():
    assert [encode(x) for x in diamond()] == list("0abc1")
