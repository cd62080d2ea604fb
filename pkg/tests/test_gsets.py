import itertools
import random

import pytest
from hypothesis import given, strategies as st

from catalog import Q8, SMALL, group
from linequiv.groups import Cyclic, Dihedral, Product, class_index_map, conjugacy_classes, construct
from linequiv.gsets import (
    GSet,
    GSetError,
    cartesian_product,
    coset_space,
    disjoint_union,
    empty_gset,
    fixed_points,
    from_orbit_type,
    function_gset,
    hom_count,
    hom_count_bruteforce,
    induce,
    inflate,
    isomorphic,
    linearly_equivalent,
    one_point,
    orbit_decomposition,
    orbit_sizes,
    perm_character,
    points_fixed_by,
    regular,
    repeat,
    restrict,
    tensor,
    tensor_size,
)
from linequiv.subgroups import all_subgroups, center, conjugate, generated, quotient, subgroup_classes, trivial, whole


def klein():
    return construct(Product(Cyclic(2), Cyclic(2)))


def fig3_pair(G):
    classes = subgroup_classes(G)
    X = disjoint_union(*(coset_space(G, classes[i].representative) for i in (1, 2, 3)))
    Y = disjoint_union(regular(G), one_point(G), one_point(G))
    return X, Y


def d6():
    G = construct(Dihedral(6))
    s = G.index_of(tuple((i + 1) % 6 for i in range(6)))
    t = G.index_of(tuple((-i) % 6 for i in range(6)))
    return G, s, t


def random_gset(G, rng, max_orbits=3, max_size=None):
    classes = subgroup_classes(G)
    while True:
        k = rng.randint(1, max_orbits)
        counts = {}
        for _ in range(k):
            i = rng.randrange(len(classes))
            counts[i] = counts.get(i, 0) + 1
        X = from_orbit_type(G, counts)
        if max_size is None or X.size <= max_size:
            return X


def diagonal_orbit_count(X, Y):
    """Orbits of G on X x Y found by union-find, independent of cartesian_product."""
    G = X.group
    parent = {(x, y): (x, y) for x in range(X.size) for y in range(Y.size)}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in G.generators:
        for x, y in parent:
            a, b = find((x, y)), find((X.action[g][x], Y.action[g][y]))
            if a != b:
                parent[a] = b
    return len({find(p) for p in parent})


# -- coset spaces and unions --------------------------------------------------


def test_coset_space_examples():
    G, s, _ = d6()
    assert coset_space(G, whole(G)).size == 1
    R = coset_space(G, trivial(G))
    assert R.size == 12
    assert isomorphic(R, regular(G))
    C = coset_space(G, generated(G, [s]))
    assert C.size == 2
    assert fixed_points(C, s) == 2


def test_union_with_empty_is_identity():
    G = klein()
    X = coset_space(G, subgroup_classes(G)[1].representative)
    U = disjoint_union(X, empty_gset(G))
    assert U.action == X.action


def test_fig3_sets():
    G = klein()
    X, Y = fig3_pair(G)
    assert X.size == Y.size == 6
    assert perm_character(X) == perm_character(Y) == (6, 2, 2, 2)
    assert linearly_equivalent(X, Y)
    assert not isomorphic(X, Y)
    assert orbit_sizes(X) == [2, 2, 2]
    assert orbit_sizes(Y) == [1, 1, 4]


def test_stabilizer_class_lookup():
    G, _, t = d6()
    T = generated(G, [t])
    for g in range(G.order):
        X = coset_space(G, conjugate(G, T, g))
        assert orbit_decomposition(X).as_dict() == orbit_decomposition(coset_space(G, T)).as_dict()
    assert orbit_decomposition(regular(G)).as_dict() == {0: 1}


def test_isomorphic_to_conjugate_coset_space():
    G, s, t = d6()
    H = generated(G, [t])
    for g in range(G.order):
        assert isomorphic(coset_space(G, H), coset_space(G, conjugate(G, H, g)))


# -- characters ----------------------------------------------------------------


def test_characters_of_regular_and_point():
    G, _, _ = d6()
    assert perm_character(regular(G)) == (12, 0, 0, 0, 0, 0)
    assert perm_character(one_point(G)) == (1,) * 6


def test_abelian_quasiregular_character():
    G = construct(Product(Cyclic(2), Cyclic(4)))
    classes = conjugacy_classes(G)
    for H in all_subgroups(G):
        chi = perm_character(coset_space(G, H))
        for c, value in zip(classes, chi):
            assert value == (G.order // H.order if c.representative in H else 0)


def test_not_equivalent_example():
    G, s, _ = d6()
    X = coset_space(G, generated(G, [s]))
    Y = disjoint_union(one_point(G), one_point(G))
    assert X.size == Y.size
    assert not linearly_equivalent(X, Y)


@pytest.mark.parametrize("text", SMALL)
def test_action_axioms_and_character_invariants(text):
    G = group(text)
    rng = random.Random(text)
    for _ in range(5):
        X = random_gset(G, rng)
        X.check()
        chi = perm_character(X)
        assert chi[0] == X.size
        assert all(v >= 0 for v in chi)
        cls = class_index_map(G)
        assert all(fixed_points(X, g) == chi[cls[g]] for g in range(G.order))
        t = orbit_decomposition(X)
        classes = subgroup_classes(G)
        assert sum(m * classes[i].index for i, m in t.counts) == X.size


@pytest.mark.parametrize("seed", range(50))
def test_character_is_a_ring_homomorphism(seed):
    rng = random.Random(seed)
    G = group(rng.choice(SMALL))
    X = random_gset(G, rng, max_size=24)
    Y = random_gset(G, rng, max_size=24)
    cx, cy = perm_character(X), perm_character(Y)
    assert perm_character(disjoint_union(X, Y)) == tuple(a + b for a, b in zip(cx, cy))
    assert perm_character(cartesian_product(X, Y)) == tuple(a * b for a, b in zip(cx, cy))


@given(st.sampled_from(SMALL), st.integers(0, 10**6))
def test_isomorphic_implies_equivalent_and_remark_sizes(text, seed):
    G = group(text)
    rng = random.Random(seed)
    X, Y = random_gset(G, rng), random_gset(G, rng)
    if isomorphic(X, Y):
        assert linearly_equivalent(X, Y)
    if linearly_equivalent(X, Y):
        assert X.size == Y.size
        assert len(X.orbits()) == len(Y.orbits())


# -- tensor ---------------------------------------------------------------------


def test_tensor_examples():
    G, s, t = d6()
    Y = disjoint_union(coset_space(G, generated(G, [t])), one_point(G))
    assert tensor(regular(G), Y).orbit_count == Y.size
    assert tensor(one_point(G), Y).orbit_count == len(Y.orbits())
    A = coset_space(G, generated(G, [t]))
    B = coset_space(G, generated(G, [s]))
    assert tensor_size(A, B) == diagonal_orbit_count(A, B)


@given(st.sampled_from(SMALL), st.integers(0, 10**6))
def test_tensor_size_matches_union_find(text, seed):
    G = group(text)
    rng = random.Random(seed)
    X, Y = random_gset(G, rng, 2, 16), random_gset(G, rng, 2, 16)
    assert tensor_size(X, Y) == diagonal_orbit_count(X, Y)


def test_function_space_adjunction_cardinality():
    # |S^(X x_G Y)| = |Hom_G(Y, S^X)| for a 2-element S
    rng = random.Random(4)
    checked = 0
    for text in ["C(4)", "P(C(2),C(2))", "D(3)"]:
        G = group(text)
        for _ in range(6):
            X = random_gset(G, rng, 2, 6)
            Y = random_gset(G, rng, 2, 12)
            assert hom_count(Y, function_gset(X, 2)) == 2 ** tensor_size(X, Y)
            checked += 1
    assert checked == 18


# -- induction, restriction, inflation -----------------------------------------


def test_induce_examples():
    G, s, _ = d6()
    X = coset_space(G, generated(G, [s]))
    assert induce(G, whole(G), restrict(X, whole(G))).action == X.action
    for H in all_subgroups(G):
        lifted = induce(G, H, one_point(H.as_group()))
        assert isomorphic(lifted, coset_space(G, H))
    R = generated(G, [s])
    lifted = induce(G, R, regular(R.as_group()))
    assert lifted.size == 12
    assert isomorphic(lifted, regular(G))


def test_inflate_examples():
    G, s, _ = d6()
    Q, _ = quotient(G, trivial(G))
    X = disjoint_union(regular(Q), one_point(Q))
    assert inflate(G, trivial(G), X).action == tuple(X.action)
    Qfull, _ = quotient(G, whole(G))
    Y = repeat(regular(Qfull), 3)
    Z = inflate(G, whole(G), Y)
    assert Z.size == 3
    assert all(fixed_points(Z, g) == 3 for g in range(G.order))


def test_inflated_klein_pair_on_q8():
    G = group(Q8)
    Z = center(G)
    Qg, _ = quotient(G, Z)
    assert Qg.order == 4 and Qg.is_abelian() and not Qg.is_cyclic()
    X, Y = fig3_pair(Qg)
    IX, IY = inflate(G, Z, X), inflate(G, Z, Y)
    IX.check()
    IY.check()
    assert linearly_equivalent(IX, IY)
    assert orbit_sizes(IX) != orbit_sizes(IY)


def test_induce_rejects_foreign_sets():
    G, s, _ = d6()
    H = generated(G, [s])
    with pytest.raises(GSetError):
        induce(G, H, regular(G))


# -- hom counting ----------------------------------------------------------------


def test_hom_count_examples():
    G, s, t = d6()
    Y = disjoint_union(coset_space(G, generated(G, [t])), one_point(G), one_point(G))
    assert hom_count(one_point(G), Y) == 2
    assert hom_count(regular(G), Y) == Y.size
    for H in all_subgroups(G):
        assert hom_count(coset_space(G, H), Y) == points_fixed_by(Y, H)


@given(st.sampled_from(["C(2)", "C(3)", "P(C(2),C(2))", "D(3)", "C(4)"]), st.integers(0, 10**6))
def test_hom_count_against_bruteforce(text, seed):
    G = group(text)
    rng = random.Random(seed)
    X = random_gset(G, rng, 2, 6)
    Y = random_gset(G, rng, 2, 6)
    assert hom_count(X, Y) == hom_count_bruteforce(X, Y)


def test_hom_count_cap():
    G, _, _ = d6()
    X = repeat(one_point(G), 8)
    with pytest.raises(GSetError):
        hom_count(X, regular(G), max_candidates=1000)


def adjunction_instance(rng):
    G = group(rng.choice(SMALL))
    subs = all_subgroups(G)
    H = rng.choice(subs)
    HG = H.as_group()
    X = random_gset(HG, rng, 2, 12)
    Y = random_gset(G, rng, 2, 12)
    return G, H, X, Y


@pytest.mark.parametrize("seed", range(50))
def test_induction_restriction_adjunction(seed):
    G, H, X, Y = adjunction_instance(random.Random(seed))
    assert hom_count(induce(G, H, X), Y) == hom_count(X, restrict(Y, H))


def test_gset_check_catches_bad_tables():
    G = klein()
    bad = GSet(G, tuple((1, 0) for _ in range(G.order)))
    with pytest.raises(GSetError):
        bad.check()


def test_cartesian_product_point_encoding():
    G, s, _ = d6()
    X = coset_space(G, generated(G, [s]))
    Y = one_point(G)
    P = cartesian_product(X, Y)
    for g, x in itertools.product(range(G.order), range(X.size)):
        assert P.action[g][x] == X.action[g][x]
