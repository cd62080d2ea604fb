"""Finite G-sets stored as full action tables.

``action[g][x]`` is the image of point x under element index g. Tables are
indexed by group element rather than by generator so fixed-point counts need
no word expansion.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from .groups import Group, class_index_map, conjugacy_classes, identity_perm
from .subgroups import (
    Subgroup,
    class_of_subgroup,
    is_normal,
    left_cosets,
    quotient,
    subgroup_classes,
)


class GSetError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GSet:
    group: Group
    action: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.action[0]) if self.action else 0

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"<GSet of size {self.size} over {self.group!r}>"

    def check(self) -> None:
        """Exhaustively verify the action axioms; raises GSetError."""
        G = self.group
        if len(self.action) != G.order:
            raise GSetError("action table must have one row per group element")
        if tuple(self.action[0]) != identity_perm(self.size):
            raise GSetError("identity does not act trivially")
        for g in range(G.order):
            ag = self.action[g]
            for h in range(G.order):
                ah = self.action[h]
                agh = self.action[G.table[g][h]]
                if any(ag[ah[x]] != agh[x] for x in range(self.size)):
                    raise GSetError(f"action({g})*action({h}) != action({g}*{h})")

    def orbits(self) -> list[list[int]]:
        seen = [False] * self.size
        out = []
        gens = self.group.generators
        for x in range(self.size):
            if seen[x]:
                continue
            orbit = [x]
            seen[x] = True
            for y in orbit:
                for g in gens:
                    z = self.action[g][y]
                    if not seen[z]:
                        seen[z] = True
                        orbit.append(z)
            out.append(sorted(orbit))
        return out

    def stabilizer(self, x: int) -> Subgroup:
        members = tuple(g for g in range(self.group.order) if self.action[g][x] == x)
        return Subgroup(self.group, members, members[1:])


def _same_group(X: GSet, Y: GSet) -> None:
    if X.group != Y.group:
        raise GSetError("G-sets over different groups")


def empty_gset(G: Group) -> GSet:
    return GSet(G, tuple(() for _ in range(G.order)))


def one_point(G: Group) -> GSet:
    return GSet(G, tuple((0,) for _ in range(G.order)))


def regular(G: Group) -> GSet:
    return GSet(G, G.table)


def coset_space(G: Group, H: Subgroup) -> GSet:
    """Left cosets G/H; point 0 is the coset H itself."""
    if H.parent != G:
        raise GSetError("H is not a subgroup of G")
    reps, coset_of = left_cosets(G, H)
    action = tuple(tuple(coset_of[G.table[g][r]] for r in reps) for g in range(G.order))
    return GSet(G, action)


def disjoint_union(*parts: GSet) -> GSet:
    if not parts:
        raise GSetError("disjoint_union needs at least one G-set")
    G = parts[0].group
    for P in parts[1:]:
        _same_group(parts[0], P)
    rows = []
    for g in range(G.order):
        row: list[int] = []
        offset = 0
        for P in parts:
            row.extend(offset + y for y in P.action[g])
            offset += P.size
        rows.append(tuple(row))
    return GSet(G, tuple(rows))


def repeat(X: GSet, k: int) -> GSet:
    if k < 0:
        raise GSetError("negative multiplicity")
    if k == 0:
        return empty_gset(X.group)
    return disjoint_union(*([X] * k))


def cartesian_product(X: GSet, Y: GSet) -> GSet:
    """X x Y with the diagonal action; point (x, y) is x*|Y| + y."""
    _same_group(X, Y)
    ny = Y.size
    rows = []
    for ax, ay in zip(X.action, Y.action):
        rows.append(tuple(ax[x] * ny + ay[y] for x in range(X.size) for y in range(ny)))
    return GSet(X.group, tuple(rows))


def fixed_points(X: GSet, g: int) -> int:
    X.group.check_index(g)
    return sum(1 for x, y in enumerate(X.action[g]) if x == y)


def perm_character(X: GSet) -> tuple[int, ...]:
    """Fixed-point counts at each conjugacy-class representative."""
    return tuple(fixed_points(X, c.representative) for c in conjugacy_classes(X.group))


def is_class_function(X: GSet) -> bool:
    cls = class_index_map(X.group)
    chi = perm_character(X)
    return all(fixed_points(X, g) == chi[cls[g]] for g in range(X.group.order))


def linearly_equivalent(X: GSet, Y: GSet) -> bool:
    _same_group(X, Y)
    return perm_character(X) == perm_character(Y)


@dataclass(frozen=True)
class OrbitType:
    """Multiset of subgroup-class indices, one entry per orbit."""

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_counter(cls, c: Counter) -> "OrbitType":
        return cls(tuple(sorted((i, m) for i, m in c.items() if m)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def as_vector(self, r: int) -> list[int]:
        v = [0] * r
        for i, m in self.counts:
            v[i] = m
        return v

    @property
    def orbit_count(self) -> int:
        return sum(m for _, m in self.counts)


def orbit_decomposition(X: GSet) -> OrbitType:
    G = X.group
    c: Counter = Counter()
    for orbit in X.orbits():
        c[class_of_subgroup(G, X.stabilizer(orbit[0]))] += 1
    return OrbitType.from_counter(c)


def orbit_sizes(X: GSet) -> list[int]:
    return sorted(len(o) for o in X.orbits())


def isomorphic(X: GSet, Y: GSet) -> bool:
    _same_group(X, Y)
    return orbit_decomposition(X) == orbit_decomposition(Y)


def tensor(X: GSet, Y: GSet) -> OrbitType:
    """Orbit structure of X x Y; its orbit count is |X x_G Y|."""
    return orbit_decomposition(cartesian_product(X, Y))


def tensor_size(X: GSet, Y: GSet) -> int:
    return len(cartesian_product(X, Y).orbits())


def from_orbit_type(G: Group, counts: dict[int, int] | OrbitType) -> GSet:
    """Disjoint union of coset spaces G/H_i with the given multiplicities."""
    if isinstance(counts, OrbitType):
        counts = counts.as_dict()
    classes = subgroup_classes(G)
    parts = []
    for i in sorted(counts):
        if not 0 <= i < len(classes):
            raise GSetError(f"subgroup class index {i} out of range 0..{len(classes) - 1}")
        if counts[i] < 0:
            raise GSetError("negative multiplicity")
        parts.extend([coset_space(G, classes[i].representative)] * counts[i])
    return disjoint_union(*parts) if parts else empty_gset(G)


def restrict(Y: GSet, H: Subgroup) -> GSet:
    """Y regarded as an H-set (over ``H.as_group()``)."""
    if H.parent != Y.group:
        raise GSetError("H is not a subgroup of Y's group")
    return GSet(H.as_group(), tuple(Y.action[g] for g in H.members))


def induce(G: Group, H: Subgroup, X: GSet) -> GSet:
    """G x_H X for an H-set X.

    Points are pairs (coset i, x) stored as i*|X| + x; g sends (t_i, x) to
    (t_j, h x) where g t_i = t_j h.
    """
    if H.parent != G:
        raise GSetError("H is not a subgroup of G")
    HG = H.as_group()
    if X.group != HG:
        raise GSetError("X is not a G-set over this subgroup")
    reps, coset_of = left_cosets(G, H)
    pos_in_h = {g: i for i, g in enumerate(H.members)}
    n = X.size
    rows = []
    for g in range(G.order):
        row = [0] * (len(reps) * n)
        for i, t in enumerate(reps):
            gt = G.table[g][t]
            j = coset_of[gt]
            h = G.table[G.inverse_of[reps[j]]][gt]
            ah = X.action[pos_in_h[h]]
            for x in range(n):
                row[i * n + x] = j * n + ah[x]
        rows.append(tuple(row))
    return GSet(G, tuple(rows))


def inflate(G: Group, N: Subgroup, X: GSet) -> GSet:
    """Pull a G/N-set back to G along the projection."""
    if N.parent != G:
        raise GSetError("N is not a subgroup of G")
    if not is_normal(G, N):
        raise GSetError("N is not normal in G")
    Q, proj = quotient(G, N)
    if X.group != Q:
        raise GSetError("X is not a G-set over G/N")
    return GSet(G, tuple(X.action[proj[g]] for g in range(G.order)))


def hom_count(X: GSet, Y: GSet, max_candidates: int = 10**6) -> int:
    """Number of equivariant maps X -> Y, by exhaustive search.

    An equivariant map is fixed by its values on one point per X-orbit, so the
    search space is |Y|^(number of X-orbits); every candidate is checked.
    """
    _same_group(X, Y)
    G = X.group
    orbits = X.orbits()
    if Y.size ** len(orbits) > max_candidates:
        raise GSetError(f"hom search space {Y.size}^{len(orbits)} exceeds cap {max_candidates}")
    reps = [o[0] for o in orbits]
    total = 0
    for choice in itertools.product(range(Y.size), repeat=len(reps)):
        f = [-1] * X.size
        ok = True
        for x0, y0 in zip(reps, choice):
            for g in range(G.order):
                x, y = X.action[g][x0], Y.action[g][y0]
                if f[x] == -1:
                    f[x] = y
                elif f[x] != y:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            total += 1
    return total


def hom_count_bruteforce(X: GSet, Y: GSet, max_maps: int = 10**6) -> int:
    """Count equivariant maps by checking every function X -> Y."""
    _same_group(X, Y)
    if Y.size ** X.size > max_maps:
        raise GSetError("brute-force map space too large")
    G = X.group
    total = 0
    for f in itertools.product(range(Y.size), repeat=X.size):
        if all(f[X.action[g][x]] == Y.action[g][f[x]] for g in G.generators for x in range(X.size)):
            total += 1
    return total


def function_gset(X: GSet, s: int) -> GSet:
    """S^X for an s-element set S, with (g f)(x) = f(g^-1 x).

    Functions are numbered in ``itertools.product`` order of their value tuples.
    """
    G = X.group
    n = X.size
    funcs = list(itertools.product(range(s), repeat=n))
    code = {f: i for i, f in enumerate(funcs)}
    rows = []
    for g in range(G.order):
        ginv = X.action[G.inverse_of[g]]
        rows.append(tuple(code[tuple(f[ginv[x]] for x in range(n))] for f in funcs))
    return GSet(G, tuple(rows))


def points_fixed_by(Y: GSet, H: Subgroup) -> int:
    """|{y : H is contained in Stab(y)}|."""
    return sum(1 for y in range(Y.size) if all(Y.action[h][y] == y for h in H.members))

