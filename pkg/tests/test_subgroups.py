import itertools

import pytest
from sympy import divisors

from catalog import CATALOG, HOLOMORPH_Z8, Q8, SMALL, group
from linequiv.groups import Cyclic, Dihedral, Product, construct
from linequiv.subgroups import (
    all_subgroups,
    are_conjugate,
    center,
    conjugate,
    derived_subgroup,
    frattini,
    generated,
    is_normal,
    normalizer,
    quotient,
    subgroup_classes,
    whole,
)


def closed_subsets(G):
    """Every subset containing e and closed under products (order <= 12)."""
    found = set()
    others = range(1, G.order)
    for r in range(G.order):
        for combo in itertools.combinations(others, r):
            s = frozenset((0,) + combo)
            if all(G.mul(a, b) in s for a in s for b in s):
                found.add(s)
    return found


def pairwise_joins(G):
    """Fixpoint of joining any two known subgroups, seeded with cyclic ones."""
    known = {frozenset(generated(G, [g]).members) for g in range(G.order)}
    while True:
        new = set(known)
        for a, b in itertools.combinations(known, 2):
            new.add(frozenset(generated(G, list(a | b)).members))
        if new == known:
            return known
        known = new


def d6_words(G):
    s = G.index_of(tuple((i + 1) % 6 for i in range(6)))
    t = G.index_of(tuple((-i) % 6 for i in range(6)))
    return s, t


def test_cyclic_prime_has_two_subgroups():
    assert len(all_subgroups(construct(Cyclic(7)))) == 2


def test_klein_four_has_five_subgroups():
    G = construct(Product(Cyclic(2), Cyclic(2)))
    assert sorted(H.order for H in all_subgroups(G)) == [1, 2, 2, 2, 4]
    assert len(subgroup_classes(G)) == 5


def test_d6_counts():
    G = construct(Dihedral(6))
    assert len(all_subgroups(G)) == 16
    assert len(subgroup_classes(G)) == 10


@pytest.mark.parametrize("text", ["C(6)", "P(C(2),C(2))", "D(3)", "D(4)", "D(6)", Q8, "C(12)"])
def test_subgroups_match_subset_oracle(text):
    G = group(text)
    ours = {frozenset(H.members) for H in all_subgroups(G)}
    assert ours == closed_subsets(G)


@pytest.mark.parametrize("text", ["D(8)", "P(C(3),C(3))", "M(5,4,2)", HOLOMORPH_Z8])
def test_subgroups_match_pairwise_join_oracle(text):
    G = group(text)
    ours = {frozenset(H.members) for H in all_subgroups(G)}
    assert ours == pairwise_joins(G)


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclic_classes_are_divisors(n):
    G = group(f"C({n})")
    assert [c.order for c in subgroup_classes(G)] == divisors(n)


@pytest.mark.parametrize("text", CATALOG)
def test_class_sizes_and_closure(text):
    G = group(text)
    classes = subgroup_classes(G)
    subs = all_subgroups(G)
    assert sum(c.class_size for c in classes) == len(subs)
    for H in subs:
        assert G.order % H.order == 0
        s = set(H.members)
        assert 0 in s
        assert all(G.mul(x, G.inv(y)) in s for x in s for y in s)
    for i, c in enumerate(classes):
        H = c.representative
        assert c.index_in_basis == i
        assert c.class_size == G.order // normalizer(G, H).order
        orbit = {frozenset(conjugate(G, H, g).members) for g in range(G.order)}
        assert len(orbit) == c.class_size


@pytest.mark.parametrize("text", SMALL)
def test_class_order_is_canonical(text):
    G = group(text)
    keys = [(c.order, c.representative.members) for c in subgroup_classes(G)]
    assert keys == sorted(keys)
    for c in subgroup_classes(G):
        conj = [conjugate(G, c.representative, g).members for g in range(G.order)]
        assert c.representative.members == min(conj)


def test_are_conjugate_examples():
    G = construct(Dihedral(6))
    s, t = d6_words(G)
    T = generated(G, [t])
    assert are_conjugate(G, T, T) == 0
    ts = generated(G, [G.mul(t, s)])
    assert are_conjugate(G, T, ts) is None
    ts2 = generated(G, [G.mul(t, G.power(s, 2))])
    g = are_conjugate(G, T, ts2)
    assert g is not None
    assert conjugate(G, T, g) == ts2
    rotations = set(generated(G, [s]).members)
    assert any(
        conjugate(G, T, r) == ts2 for r in rotations
    )


def test_structural_helpers():
    G = construct(Dihedral(6))
    s, _ = d6_words(G)
    assert derived_subgroup(G) == generated(G, [G.power(s, 2)])
    assert center(G) == generated(G, [G.power(s, 3)])
    assert is_normal(G, generated(G, [s]))
    Q = group(Q8)
    assert frattini(Q, whole(Q)).order == 2
    assert frattini(Q, whole(Q)) == center(Q)


def test_quotient_is_a_homomorphism():
    G = construct(Dihedral(6))
    N = center(G)
    Qg, proj = quotient(G, N)
    assert Qg.order == 6
    for a in range(G.order):
        for b in range(G.order):
            assert proj[G.mul(a, b)] == Qg.mul(proj[a], proj[b])
