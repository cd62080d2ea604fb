"""Subgroup enumeration and conjugacy classes of subgroups.

Subgroups are stored as bitmasks over element indices of the parent group,
which makes closure, intersection and conjugation cheap to hash and compare.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .groups import DEFAULT_ORDER_CAP, Group, GroupError, OrderCapExceeded


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def members_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: Group
    members: tuple[int, ...]
    gens: tuple[int, ...] = ()
    mask: int = field(default=0, repr=False)

    def __post_init__(self):
        if not self.mask:
            object.__setattr__(self, "mask", mask_of(self.members))

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.members)

    def __contains__(self, g: int) -> bool:
        return bool(self.mask >> g & 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.parent == other.parent and self.mask == other.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __repr__(self) -> str:
        return f"<Subgroup order {self.order} of {self.parent!r}>"

    def issubset(self, other: "Subgroup") -> bool:
        return self.mask & ~other.mask == 0

    def as_group(self) -> Group:
        """This subgroup as a standalone Group (elements kept in parent order).

        The same Group object is returned on every call; ``embedding`` maps its
        element indices back to the parent.
        """
        cache = self.parent._cache.setdefault("subgroup_groups", {})
        if self.mask not in cache:
            elems = [self.parent.elements[g] for g in self.members]
            pos = {g: i for i, g in enumerate(self.members)}
            gens = sorted({pos[g] for g in self.gens}) if self.gens else ()
            cache[self.mask] = Group(elems, gens)
        return cache[self.mask]

    @property
    def embedding(self) -> tuple[int, ...]:
        return self.members


def generated(G: Group, gens: Sequence[int]) -> Subgroup:
    """Subgroup generated by element indices ``gens``."""
    for g in gens:
        G.check_index(g)
    gens = tuple(sorted({g for g in gens if g != 0}))
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = G.table[x][s]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(G, tuple(sorted(seen)), gens)


def subgroup_from_members(G: Group, members: Iterable[int]) -> Subgroup:
    """Validate a member list and wrap it as a Subgroup."""
    members = tuple(sorted(set(members)))
    if not members or members[0] != 0:
        raise GroupError("subgroup must contain the identity")
    mask = mask_of(members)
    for x in members:
        for y in members:
            if not mask >> G.table[x][G.inverse_of[y]] & 1:
                raise GroupError("member set is not closed under x*y^-1")
    return Subgroup(G, members, members[1:], mask)


def is_subgroup_of(G: Group, H: Subgroup) -> bool:
    return H.parent == G


def _require(G: Group, *subs: Subgroup) -> None:
    for H in subs:
        if H.parent != G:
            raise GroupError("subgroup does not belong to this group")


def conjugate(G: Group, H: Subgroup, g: int) -> Subgroup:
    """g H g^-1."""
    members = sorted(G.conj(g, h) for h in H.members)
    return Subgroup(G, tuple(members), tuple(G.conj(g, h) for h in H.gens))


def _conj_mask(G: Group, mask: int, g: int) -> int:
    out = 0
    for h in members_of(mask):
        out |= 1 << G.conj(g, h)
    return out


def intersection(H: Subgroup, K: Subgroup) -> Subgroup:
    mask = H.mask & K.mask
    members = members_of(mask)
    return Subgroup(H.parent, members, members[1:], mask)


def all_subgroups(G: Group, order_cap: int = DEFAULT_ORDER_CAP) -> list[Subgroup]:
    """Every subgroup once, sorted by (order, member list).

    Seeds with the cyclic subgroups and joins with cyclic subgroups until no
    new subgroup appears; every subgroup is the join of its cyclic subgroups.
    """
    if G.order > order_cap:
        raise OrderCapExceeded(f"group order {G.order} exceeds cap {order_cap}")
    if "subgroups" in G._cache:
        return G._cache["subgroups"]
    cyclic: dict[int, Subgroup] = {}
    for g in range(G.order):
        C = generated(G, [g])
        cyclic.setdefault(C.mask, C)
    cyclics = sorted(cyclic.values(), key=lambda S: (S.order, S.members))
    found: dict[int, Subgroup] = dict(cyclic)
    frontier = list(cyclics)
    while frontier:
        fresh = []
        for H in frontier:
            for C in cyclics:
                if C.mask & ~H.mask == 0:
                    continue
                J = generated(G, H.gens + C.gens)
                if J.mask not in found:
                    found[J.mask] = J
                    fresh.append(J)
        frontier = fresh
    subs = sorted(found.values(), key=lambda S: (S.order, S.members))
    G._cache["subgroups"] = subs
    return subs


@dataclass(frozen=True)
class SubgroupClass:
    representative: Subgroup
    class_size: int
    index_in_basis: int
    conjugates: tuple[Subgroup, ...] = field(repr=False, default=())

    @property
    def order(self) -> int:
        return self.representative.order

    @property
    def index(self) -> int:
        return self.representative.index


def subgroup_classes(G: Group, order_cap: int = DEFAULT_ORDER_CAP) -> list[SubgroupClass]:
    """One class per conjugacy class of subgroups, in canonical basis order.

    The representative is the lexicographically smallest conjugate; classes are
    sorted by (order, representative members), so the trivial subgroup comes
    first and G last.
    """
    if "subgroup_classes" in G._cache:
        return G._cache["subgroup_classes"]
    subs = all_subgroups(G, order_cap)
    by_mask = {S.mask: S for S in subs}
    assigned: set[int] = set()
    groups = []
    for S in subs:
        if S.mask in assigned:
            continue
        orbit = {S.mask}
        frontier = [S.mask]
        while frontier:
            nxt = []
            for m in frontier:
                for g in G.generators:
                    c = _conj_mask(G, m, g)
                    if c not in orbit:
                        orbit.add(c)
                        nxt.append(c)
            frontier = nxt
        assigned |= orbit
        conjugates = sorted((by_mask[m] for m in orbit), key=lambda T: T.members)
        groups.append(conjugates)
    groups.sort(key=lambda cs: (cs[0].order, cs[0].members))
    classes = [
        SubgroupClass(cs[0], len(cs), i, tuple(cs)) for i, cs in enumerate(groups)
    ]
    class_of = {}
    for c in classes:
        for T in c.conjugates:
            class_of[T.mask] = c.index_in_basis
    G._cache["subgroup_classes"] = classes
    G._cache["subgroup_class_of"] = class_of
    return classes


def class_of_subgroup(G: Group, H: Subgroup) -> int:
    """Position of H's conjugacy class in the canonical basis."""
    _require(G, H)
    subgroup_classes(G)
    try:
        return G._cache["subgroup_class_of"][H.mask]
    except KeyError:
        raise GroupError("not a subgroup of this group") from None


def are_conjugate(G: Group, H: Subgroup, K: Subgroup) -> int | None:
    """Some g with g H g^-1 = K, or None."""
    _require(G, H, K)
    if H.order != K.order:
        return None
    for g in range(G.order):
        if _conj_mask(G, H.mask, g) == K.mask:
            return g
    return None


def normalizer(G: Group, H: Subgroup) -> Subgroup:
    _require(G, H)
    members = [g for g in range(G.order) if _conj_mask(G, H.mask, g) == H.mask]
    return Subgroup(G, tuple(members), tuple(members[1:]))


def is_normal(G: Group, N: Subgroup) -> bool:
    _require(G, N)
    return all(_conj_mask(G, N.mask, g) == N.mask for g in G.generators)


def whole(G: Group) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)), G.generators)


def trivial(G: Group) -> Subgroup:
    return Subgroup(G, (0,), ())


def derived_subgroup(G: Group) -> Subgroup:
    comms = {
        G.mul(G.mul(x, y), G.mul(G.inv(x), G.inv(y)))
        for x in range(G.order)
        for y in range(G.order)
    }
    return generated(G, sorted(comms))


def center(G: Group) -> Subgroup:
    members = [z for z in range(G.order) if all(G.table[z][g] == G.table[g][z] for g in G.generators)]
    return Subgroup(G, tuple(members), tuple(members[1:]))


def maximal_subgroups(G: Group, H: Subgroup) -> list[Subgroup]:
    """Maximal proper subgroups of H (H given as a subgroup of G)."""
    _require(G, H)
    inside = [S for S in all_subgroups(G) if S.issubset(H) and S.mask != H.mask]
    return [S for S in inside if not any(S.mask != T.mask and S.issubset(T) for T in inside)]


def frattini(G: Group, H: Subgroup) -> Subgroup:
    """Intersection of the maximal subgroups of H."""
    mask = H.mask
    for M in maximal_subgroups(G, H):
        mask &= M.mask
    members = members_of(mask)
    return Subgroup(G, members, members[1:], mask)


def left_cosets(G: Group, H: Subgroup) -> tuple[list[int], list[int]]:
    """Coset representatives (first element of each coset in index order) and
    the element -> coset position map."""
    coset_of = [-1] * G.order
    reps = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        k = len(reps)
        reps.append(g)
        for h in H.members:
            coset_of[G.table[g][h]] = k
    return reps, coset_of


def quotient(G: Group, N: Subgroup) -> tuple[Group, list[int]]:
    """G/N realised on the cosets of N, plus the projection G -> G/N.

    Quotient elements are ordered by the first G-element of each coset.
    """
    _require(G, N)
    if not is_normal(G, N):
        raise GroupError("quotient by a non-normal subgroup")
    cache = G._cache.setdefault("quotients", {})
    if N.mask in cache:
        return cache[N.mask]
    reps, coset_of = left_cosets(G, N)
    perms = [tuple(coset_of[G.table[g][r]] for r in reps) for g in reps]
    projection = [coset_of[g] for g in range(G.order)]
    gens = sorted({projection[g] for g in G.generators} - {0})
    Q = Group(perms, gens, name=f"{G.name}/N" if G.name else "")
    cache[N.mask] = (Q, projection)
    return Q, projection
