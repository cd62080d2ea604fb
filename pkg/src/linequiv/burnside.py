"""The Burnside ring over the subgroup-class basis and its linearly trivial kernel."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .groups import Group, centralizer, conjugacy_classes
from .gsets import GSet, coset_space, disjoint_union, empty_gset, linearly_equivalent, repeat
from .intlinalg import left_kernel, lll_reduce
from .subgroups import Subgroup, subgroup_classes


class NotInKernel(ValueError):
    """A Burnside vector was expected to be linearly trivial but is not."""


def quasiregular_character(G: Group, H: Subgroup) -> tuple[int, ...]:
    """Fixed-point character of G/H from class data alone.

    Value at g is |g^G ∩ H| * |C_G(g)| / |H|.
    """
    if H.parent != G:
        raise ValueError("H is not a subgroup of G")
    values = []
    for c in conjugacy_classes(G):
        meet = sum(1 for x in c.members if x in H)
        num = meet * len(centralizer(G, c.representative))
        q, rem = divmod(num, H.order)
        if rem:
            raise ArithmeticError("quasiregular character value is not an integer")
        values.append(q)
    return tuple(values)


def character_matrix(G: Group) -> list[list[int]]:
    """Rows: subgroup classes (canonical order); columns: conjugacy classes."""
    if "character_matrix" not in G._cache:
        G._cache["character_matrix"] = [
            list(quasiregular_character(G, c.representative)) for c in subgroup_classes(G)
        ]
    return [list(row) for row in G._cache["character_matrix"]]


def _normalize(v: list[int]) -> list[int]:
    for x in v:
        if x:
            return v if x > 0 else [-y for y in v]
    return v


def kernel_basis(G: Group) -> list[list[int]]:
    """LLL-reduced Z-basis of the linearly trivial lattice in Z^r.

    Each vector has a positive first nonzero entry; vectors are sorted
    lexicographically.
    """
    if "kernel_basis" not in G._cache:
        raw = left_kernel(character_matrix(G))
        reduced = lll_reduce(raw) if raw else []
        G._cache["kernel_basis"] = sorted(_normalize(v) for v in reduced)
    return [list(v) for v in G._cache["kernel_basis"]]


def in_kernel(G: Group, v) -> bool:
    C = character_matrix(G)
    if len(v) != len(C):
        raise ValueError(f"vector length {len(v)} != number of subgroup classes {len(C)}")
    return all(sum(v[i] * C[i][j] for i in range(len(C))) == 0 for j in range(len(C[0])))


@dataclass(frozen=True)
class ReducedPair:
    X: GSet
    Y: GSet
    vector: tuple[int, ...]


def _side(G: Group, coeffs: dict[int, int]) -> GSet:
    classes = subgroup_classes(G)
    parts = [repeat(coset_space(G, classes[i].representative), k) for i, k in sorted(coeffs.items())]
    parts = [P for P in parts if P.size]
    return disjoint_union(*parts) if parts else empty_gset(G)


def split(v) -> tuple[dict[int, int], dict[int, int]]:
    pos = {i: x for i, x in enumerate(v) if x > 0}
    neg = {i: -x for i, x in enumerate(v) if x < 0}
    return pos, neg


def to_reduced_pair(G: Group, v) -> ReducedPair:
    """X from the positive coefficients, Y from the negative ones."""
    if len(v) != len(subgroup_classes(G)):
        raise ValueError("vector length does not match the subgroup-class basis")
    if not any(v):
        raise ValueError("the zero vector corresponds to the empty pair")
    pos, neg = split(v)
    return ReducedPair(_side(G, pos), _side(G, neg), tuple(v))


def orbit_size_profile(G: Group, v) -> Counter:
    """Signed count of orbits of each size: positive side minus negative side."""
    classes = subgroup_classes(G)
    c: Counter = Counter()
    for i, x in enumerate(v):
        if x:
            c[classes[i].index] += x
    return Counter({k: m for k, m in c.items() if m})


def is_unbalanced(G: Group, v) -> bool:
    if not in_kernel(G, v):
        raise NotInKernel("vector is not linearly trivial")
    return bool(orbit_size_profile(G, v))


def sunada_pairs(G: Group) -> list[tuple[int, int]]:
    """Pairs (i, j), i < j, of distinct subgroup classes with equal quasiregular characters."""
    C = character_matrix(G)
    return [(i, j) for i in range(len(C)) for j in range(i + 1, len(C)) if C[i] == C[j]]


def satisfies_sunada_condition(G: Group, H: Subgroup, K: Subgroup) -> bool:
    """|g^G ∩ H| = |g^G ∩ K| for every conjugacy class."""
    return all(
        sum(1 for x in c.members if x in H) == sum(1 for x in c.members if x in K)
        for c in conjugacy_classes(G)
    )


def pair_is_linearly_equivalent(pair: ReducedPair) -> bool:
    return linearly_equivalent(pair.X, pair.Y)
