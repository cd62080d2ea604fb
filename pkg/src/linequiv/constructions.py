"""Explicit unbalanced pairs and a search that finds one for any non-cyclic group.

The search follows the structural argument: a non-cyclic Sylow subgroup gives
a (Z/p)^2 section, otherwise the group is metacyclic with cyclic Sylow
subgroups and has a nonabelian section of order pq. Pairs on a section are
lifted by inflation (quotients) and induction (subgroups).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from sympy import factorint, isprime

from .burnside import kernel_basis, orbit_size_profile, to_reduced_pair
from .groups import Cyclic, Group, Metacyclic, Product, construct
from .gsets import (
    GSet,
    coset_space,
    disjoint_union,
    induce,
    inflate,
    linearly_equivalent,
    one_point,
    orbit_sizes,
    regular,
    repeat,
)
from .subgroups import (
    Subgroup,
    all_subgroups,
    derived_subgroup,
    frattini,
    generated,
    is_normal,
    quotient,
)


class PairVerificationError(AssertionError):
    """A construction produced a pair that is not unbalanced (an implementation bug)."""


@dataclass(frozen=True)
class UnbalancedPair:
    X: GSet
    Y: GSet
    provenance: tuple[str, ...] = field(default=())

    @property
    def group(self) -> Group:
        return self.X.group

    def is_linearly_equivalent(self) -> bool:
        return linearly_equivalent(self.X, self.Y)

    def is_unbalanced(self) -> bool:
        return self.is_linearly_equivalent() and orbit_sizes(self.X) != orbit_sizes(self.Y)

    def verify(self) -> "UnbalancedPair":
        if not self.is_linearly_equivalent():
            raise PairVerificationError(f"pair {self.provenance} is not linearly equivalent")
        if orbit_sizes(self.X) == orbit_sizes(self.Y):
            raise PairVerificationError(f"pair {self.provenance} has equal orbit sizes")
        return self


def _subgroups_of_order(G: Group, order: int) -> list[Subgroup]:
    return [S for S in all_subgroups(G) if S.order == order]


def _coset_union(G: Group, subgroups) -> GSet:
    return disjoint_union(*(coset_space(G, H) for H in subgroups))


# -- the two base cases ----------------------------------------------------


def elementary_abelian_pair_on(Q: Group, p: int) -> UnbalancedPair:
    """Pair on a group isomorphic to Z/p x Z/p, using its p+1 subgroups of order p."""
    lines = _subgroups_of_order(Q, p)
    X = _coset_union(Q, lines)
    Y = disjoint_union(repeat(one_point(Q), p), regular(Q))
    return UnbalancedPair(X, Y, (f"ElementaryAbelian(p={p})",))


def pq_pair_on(Q: Group, p: int, q: int) -> UnbalancedPair:
    """Pair on a nonabelian group of order pq (q = 1 mod p): p*G/P + G/Q vs p*1 + G."""
    P = _subgroups_of_order(Q, p)[0]
    (N,) = _subgroups_of_order(Q, q)
    X = disjoint_union(repeat(coset_space(Q, P), p), coset_space(Q, N))
    Y = disjoint_union(repeat(one_point(Q), p), regular(Q))
    return UnbalancedPair(X, Y, (f"Metacyclic(p={p},q={q})",))


def pair_elementary_abelian(p: int, allow_composite: bool = False) -> UnbalancedPair:
    """Pair over Z/p x Z/p built from H_lambda = {(x, lambda x)} and H_inf = {(0, x)}.

    For composite p (allow_composite=True) the analogous, generally
    non-equivalent, pair is returned unverified.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    prime = isprime(p)
    if not prime and not allow_composite:
        raise ValueError(f"{p} is not prime")
    G = construct(Product(Cyclic(p), Cyclic(p)))

    def elem(x, y):
        images = tuple((i + x) % p for i in range(p)) + tuple(p + (i + y) % p for i in range(p))
        return G.index_of(images)

    lines = [generated(G, [elem(1, lam)]) for lam in range(p)]
    lines.append(generated(G, [elem(0, 1)]))
    X = _coset_union(G, lines)
    Y = disjoint_union(repeat(one_point(G), p), regular(G))
    pair = UnbalancedPair(X, Y, (f"ElementaryAbelian(p={p})",))
    return pair.verify() if prime else pair


def _element_of_order(q: int, p: int) -> int:
    return next(r for r in range(2, q) if pow(r, p, q) == 1)


def pair_metacyclic(p: int, q: int) -> UnbalancedPair:
    """Pair over the nonabelian group Z/q ⋊ Z/p."""
    if not (isprime(p) and isprime(q)):
        raise ValueError("p and q must be prime")
    if q % p != 1:
        raise ValueError(f"need q = 1 mod p, got p={p}, q={q}")
    r = _element_of_order(q, p)
    G = construct(Metacyclic(q, p, r))
    return pq_pair_on(G, p, q).verify()


# -- lifting ----------------------------------------------------------------


def relative(K: Subgroup, L: Subgroup) -> Subgroup:
    """L (a subgroup of G inside K) as a subgroup of K.as_group()."""
    if not L.issubset(K):
        raise ValueError("L is not contained in K")
    pos = {g: i for i, g in enumerate(K.members)}
    KG = K.as_group()
    members = tuple(pos[g] for g in L.members)
    return Subgroup(KG, members, tuple(pos[g] for g in L.gens))


def lift_by_induction(G: Group, H: Subgroup, pair: UnbalancedPair) -> UnbalancedPair:
    if H.order == G.order:
        return pair if pair.group == G else UnbalancedPair(
            _transport(pair.X, G), _transport(pair.Y, G), pair.provenance
        ).verify()
    lifted = UnbalancedPair(
        induce(G, H, pair.X),
        induce(G, H, pair.Y),
        pair.provenance + (f"InducedFrom(order {H.order}, index {H.index})",),
    )
    return lifted.verify()


def lift_by_inflation(G: Group, N: Subgroup, pair: UnbalancedPair) -> UnbalancedPair:
    if not is_normal(G, N):
        raise ValueError("N is not normal in G")
    if N.order == 1 and pair.group == G:
        return pair
    lifted = UnbalancedPair(
        inflate(G, N, pair.X),
        inflate(G, N, pair.Y),
        pair.provenance + (f"InflatedFrom(quotient by order {N.order})",),
    )
    return lifted.verify()


def _transport(X: GSet, G: Group) -> GSet:
    """Move a G-set over an equal-element group object onto G."""
    if X.group.elements != G.elements:
        raise ValueError("groups differ")
    return GSet(G, X.action)


def _lift_section(G: Group, K: Subgroup, L: Subgroup, make_pair) -> UnbalancedPair:
    """Build a pair on K/L with ``make_pair`` and lift it to G."""
    KG = K.as_group()
    Lrel = relative(K, L)
    if L.order == 1:
        pair = make_pair(KG)
    else:
        Q, _ = quotient(KG, Lrel)
        pair = lift_by_inflation(KG, Lrel, make_pair(Q))
    return lift_by_induction(G, K, pair)


# -- recognition and search -------------------------------------------------


def recognize_elementary_or_pq(G: Group) -> tuple | None:
    """('elementary_abelian', p), ('pq', p, q) with p < q, or None."""
    f = factorint(G.order)
    if len(f) == 1:
        (p, e), = f.items()
        if e == 2 and G.is_abelian() and not G.is_cyclic():
            return ("elementary_abelian", p)
    elif len(f) == 2 and all(e == 1 for e in f.values()):
        p, q = sorted(f)
        if not G.is_abelian():
            return ("pq", p, q)
    return None


def sylow_subgroup(G: Group, p: int) -> Subgroup:
    e = factorint(G.order).get(p, 0)
    return _subgroups_of_order(G, p**e)[0]


def _is_cyclic_subgroup(G: Group, H: Subgroup) -> bool:
    return any(G.element_order(h) == H.order for h in H.members)


def _route_sylow(G: Group) -> UnbalancedPair | None:
    for p in sorted(factorint(G.order)):
        P = sylow_subgroup(G, p)
        if _is_cyclic_subgroup(G, P):
            continue
        Phi = frattini(G, P)
        target = p * p * Phi.order
        if P.order == target:
            K = P
        else:
            K = next(S for S in _subgroups_of_order(G, target) if Phi.issubset(S) and S.issubset(P))
        pair = _lift_section(G, K, Phi, lambda Q: elementary_abelian_pair_on(Q, p))
        return UnbalancedPair(pair.X, pair.Y, (f"Sylow(p={p}, order {P.order})",) + pair.provenance)
    return None


def _route_metacyclic(G: Group) -> UnbalancedPair | None:
    """All Sylow subgroups cyclic: G = <a> ⋊ <b> with <a> the derived subgroup."""
    A = derived_subgroup(G)
    m = A.order
    n = G.order // m
    if m == 1:
        return None
    a = next(x for x in A.members if G.element_order(x) == m)
    b = next(
        x for x in range(G.order)
        if G.element_order(x) == n and generated(G, [x]).mask & A.mask == 1
    )
    ab = G.conj(b, a)
    r = next(k for k in range(m) if G.power(a, k) == ab)
    k = 1
    while pow(r, k, m) != 1:
        k += 1
    Z0 = generated(G, [G.power(b, k)])
    steps = [f"Zassenhaus(m={m}, n={n}, r={r})"]
    if Z0.order > 1:
        G1, proj = quotient(G, Z0)
        a1, b1 = proj[a], proj[b]
        steps.append(f"quotient by central <b^{k}> of order {Z0.order}")
    else:
        G1, a1, b1 = G, a, b
    for ell in sorted(factorint(k)):
        b2 = G1.power(b1, k // ell)
        for q in sorted(factorint(m)):
            a2 = G1.power(a1, m // q)
            K = generated(G1, [a2, b2])
            KG = K.as_group()
            if KG.is_abelian():
                continue
            section = steps + [f"subgroup <a^{m // q}, b^{k // ell}> of order {q * ell}"]
            pair = lift_by_induction(G1, K, pq_pair_on(KG, ell, q))
            if G1 is not G:
                pair = lift_by_inflation(G, Z0, pair)
            return UnbalancedPair(pair.X, pair.Y, tuple(section) + pair.provenance)
    return None


def structural_unbalanced_pair(G: Group) -> UnbalancedPair | None:
    """Routes through a non-cyclic Sylow subgroup, else the metacyclic descent."""
    if G.is_cyclic():
        return None
    pair = _route_sylow(G)
    if pair is None:
        pair = _route_metacyclic(G)
    return pair


def kernel_unbalanced_pair(G: Group) -> UnbalancedPair | None:
    """First kernel basis vector whose two sides differ in orbit sizes.

    Orbit-size imbalance is linear in the Burnside vector, so the lattice has an
    unbalanced element iff some basis vector is unbalanced.
    """
    for v in kernel_basis(G):
        if orbit_size_profile(G, v):
            rp = to_reduced_pair(G, v)
            return UnbalancedPair(rp.X, rp.Y, (f"KernelSearch({list(v)})",)).verify()
    return None


def find_unbalanced_pair(G: Group) -> UnbalancedPair | None:
    """An unbalanced pair for G, or None exactly when G is cyclic."""
    if G.is_cyclic():
        return None
    pair = structural_unbalanced_pair(G)
    if pair is None:
        pair = kernel_unbalanced_pair(G)
    return pair
