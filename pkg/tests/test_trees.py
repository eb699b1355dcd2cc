import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from treelattices.trees import (
    LEAF,
    BiLeveledTree,
    Composition,
    PaintedTree,
    Permutation,
    Subset,
    WeightedTree,
    ancestors,
    bij1,
    bij1_inverse,
    bij2,
    bij2_inverse,
    bij3,
    bij3_inverse,
    bij5,
    bij5_inverse,
    bileveled_trees,
    binary_trees,
    comb_left,
    comb_normalize,
    comb_right,
    compositions,
    encode,
    encode_tree,
    enumerate_species,
    graft,
    is_upper_ideal,
    leaf_count,
    leveled_trees,
    node_count,
    painted_from_weighted,
    painted_trees,
    parse,
    parse_tree,
    permutations,
    split,
    split_at,
    split_painted,
    subsets,
    ungraft,
    upper_ideals,
    weighted_from_painted,
    weighted_trees,
)

trees_upto5 = st.integers(0, 5).flatmap(lambda n: st.sampled_from(binary_trees(n)))
painted_upto4 = st.integers(0, 4).flatmap(lambda n: st.sampled_from(painted_trees(n)))
perms_upto5 = st.integers(1, 5).flatmap(lambda n: st.sampled_from(permutations(n)))


@pytest.mark.parametrize("n", range(7))
def test_binary_trees_match_dyck_oracle(n):
    assert [encode_tree(t) for t in binary_trees(n)] == oracles.binary_trees(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_bileveled_trees_match_oracle(n):
    mine = {(encode_tree(b.tree), b.circled) for b in bileveled_trees(n)}
    assert mine == set(oracles.bileveled_pairs(n))


@pytest.mark.parametrize("nodes", range(5))
def test_painted_count_matches_oracle(nodes):
    assert len(painted_trees(nodes)) == oracles.painted_count(nodes)


@pytest.mark.parametrize("n", range(1, 7))
def test_weighted_count_matches_oracle(n):
    assert len(weighted_trees(n)) == oracles.compo_count(n)


def test_encodings_are_sorted_and_unique():
    for n in range(1, 5):
        for items in (binary_trees(n), painted_trees(n), bileveled_trees(n), weighted_trees(n),
                      permutations(n), subsets(n), compositions(n)):
            texts = [encode(x) for x in items]
            assert texts == sorted(texts)
            assert len(set(texts)) == len(texts)


@given(trees_upto5)
def test_tree_encoding_round_trip(t):
    assert parse_tree(encode_tree(t)) == t
    assert leaf_count(t) == node_count(t) + 1


@given(painted_upto4)
def test_painted_round_trip_and_ideal(p):
    assert PaintedTree.parse(p.encode()) == p
    assert is_upper_ideal(p.tree, p.painted)


def test_painted_grammar_rejects_paint_below_unpainted():
    with pytest.raises(ValueError):
        PaintedTree.parse("([..].)")


def test_upper_ideals_of_small_tree():
    t = parse_tree("((..)(..))")
    ideals = upper_ideals(t)
    assert ideals[0] == frozenset()
    assert set(ideals) == {frozenset(), frozenset({2}), frozenset({1, 2}), frozenset({2, 3}),
                           frozenset({1, 2, 3})}
    assert ancestors(t, 1) == frozenset({2})


def test_bileveled_validation():
    t = parse_tree("((..).)")
    with pytest.raises(ValueError):
        BiLeveledTree(t, frozenset({2}))  # node 1 not circled
    with pytest.raises(ValueError):
        BiLeveledTree(t, frozenset({1}))  # not an ideal
    with pytest.raises(ValueError):
        BiLeveledTree(LEAF, frozenset())


@given(perms_upto5)
def test_bij1_round_trip(w):
    lt = bij1(w)
    assert bij1_inverse(lt) == w
    assert lt.level(max(range(1, len(w) + 1), key=lambda i: w[i - 1])) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_bij1_is_a_bijection(n):
    images = {bij1(w) for w in permutations(n)}
    assert images == set(leveled_trees(n))


def test_bij1_identity_gives_left_comb():
    assert bij1(Permutation((1, 2, 3))).tree == comb_left(3)
    assert bij1(Permutation((3, 2, 1))).tree == comb_right(3)


@pytest.mark.parametrize("n", range(1, 6))
def test_bij2_is_a_bijection(n):
    images = [bij2(b) for b in bileveled_trees(n)]
    assert sorted(images, key=encode) == painted_trees(n - 1)
    for b in bileveled_trees(n):
        assert bij2_inverse(bij2(b)) == b


def test_bij2_single_node():
    assert bij2(BiLeveledTree((LEAF, LEAF), frozenset({1}))) == PaintedTree(LEAF)


@given(trees_upto5.filter(bool))
def test_bij3_round_trip(t):
    assert bij3(bij3_inverse(t)) == t


def test_bij3_rejects_empty_forest():
    with pytest.raises(ValueError):
        bij3(())


@pytest.mark.parametrize("n", range(1, 7))
def test_bij5_is_a_bijection(n):
    images = [bij5(c) for c in compositions(n)]
    assert sorted(images, key=encode) == subsets(n - 1)
    for c in compositions(n):
        assert bij5_inverse(bij5(c)) == c


def test_bij5_orientation():
    assert bij5(Composition((3,))) == Subset(2, frozenset({1, 2}))
    assert bij5(Composition((1, 1, 1))) == Subset(2, frozenset())


@given(painted_upto4)
def test_graft_ungraft_round_trip(p):
    d, forest = ungraft(p)
    assert graft(d, forest) == p
    assert len(forest) == leaf_count(d)


def test_graft_leaf_count_mismatch():
    with pytest.raises(ValueError):
        graft(LEAF, (LEAF, LEAF))


@given(trees_upto5)
def test_split_sizes(t):
    pieces = split(t)
    assert len(pieces) == leaf_count(t)
    for k, (a, b) in enumerate(pieces):
        assert node_count(a) == k and node_count(a) + node_count(b) == node_count(t)


def test_split_example():
    t = parse_tree("((..)(..))")
    assert [tuple(encode_tree(x) for x in pair) for pair in split(t)] == [
        (".", "((..)(..))"), ("(..)", "(.(..))"), ("((..).)", "(..)"), ("((..)(..))", ".")]
    with pytest.raises(ValueError):
        split_at(t, 5)


@given(painted_upto4)
def test_split_painted_keeps_paint_ideals(p):
    for a, b in split_painted(p):
        assert len(a.painted) + len(b.painted) == len(p.painted)


@given(painted_upto4)
def test_comb_normalize_and_weights(p):
    q = comb_normalize(p)
    assert comb_normalize(q) == q
    v = weighted_from_painted(q)
    assert painted_from_weighted(v) == q
    assert v.rank == p.nodes + 1


def test_weighted_from_painted_requires_combs():
    with pytest.raises(ValueError):
        weighted_from_painted(PaintedTree.parse("((..).)"))


def test_weighted_encoding():
    v = WeightedTree.parse("[[1,1],2]")
    assert v.weights == (1, 1, 2) and v.rank == 4
    assert v.encode() == "[[1,1],2]"
    for bad in ("[1,", "[1,2]]", "0", "[1 2]"):
        with pytest.raises(ValueError):
            WeightedTree.parse(bad)


@pytest.mark.parametrize("kind,text", [
    ("binary", "(.(..))"), ("painted", "[(..).]"), ("bileveled", "[[..].]"),
    ("weighted", "[2,1]"), ("composition", "1+2"), ("subset", "{1,3}/4"), ("permutation", "3124"),
])
def test_parse_round_trip(kind, text):
    assert encode(parse(kind, text)) == text


def test_permutation_validation_and_long_form():
    with pytest.raises(ValueError):
        Permutation((1, 1))
    w = Permutation(range(10, 0, -1))
    assert Permutation.parse(w.encode()) == w


def test_enumerate_species_ranks():
    assert len(enumerate_species("painted", 4)) == 21
    assert len(enumerate_species("subset", 3)) == 8
    assert len(enumerate_species("leveled", 4)) == 24
    with pytest.raises(ValueError):
        enumerate_species("nope", 2)
    with pytest.raises(ValueError):
        enumerate_species("binary", -1)


@settings(max_examples=50)
@given(st.integers(1, 6).flatmap(lambda n: st.sampled_from(weighted_trees(n))))
def test_weighted_round_trip(v):
    assert WeightedTree.parse(v.encode()) == v
