"""Small finite groups as fully enumerated permutation groups.

Permutations are tuples of 0-based images. Composition follows the left-action
convention: ``compose(g, h)`` applies ``h`` first, so ``(gh)(x) = g(h(x))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

DEFAULT_ORDER_CAP = 512

Perm = tuple[int, ...]


class GroupError(ValueError):
    """Invalid group specification or construction failure."""


class OrderCapExceeded(GroupError):
    pass


# -- permutations -----------------------------------------------------------


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def compose(g: Perm, h: Perm) -> Perm:
    """Return g∘h (h applied first)."""
    return tuple(g[x] for x in h)


def invert(g: Perm) -> Perm:
    inv = [0] * len(g)
    for x, y in enumerate(g):
        inv[y] = x
    return tuple(inv)


def is_permutation(images: Sequence[int]) -> bool:
    return sorted(images) == list(range(len(images)))


def perm_from_cycles(degree: int, cycles: Sequence[Sequence[int]]) -> Perm:
    images = list(range(degree))
    seen: set[int] = set()
    for cyc in cycles:
        for x in cyc:
            if not 0 <= x < degree:
                raise GroupError(f"point {x} outside 0..{degree - 1}")
            if x in seen:
                raise GroupError(f"point {x} repeated in cycle notation")
            seen.add(x)
        for i, x in enumerate(cyc):
            images[x] = cyc[(i + 1) % len(cyc)]
    return tuple(images)


def perm_to_cycles(g: Perm) -> str:
    """Cycle notation with 0-based points; identity is ``()``."""
    seen = set()
    parts = []
    for start in range(len(g)):
        if start in seen or g[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = g[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = g[x]
        parts.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


# -- group specifications ---------------------------------------------------


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class Dihedral:
    """Dihedral group of order 2n."""

    n: int


@dataclass(frozen=True)
class Product:
    left: "GroupSpec"
    right: "GroupSpec"


@dataclass(frozen=True)
class Metacyclic:
    """<a, b | a^m = b^n = e, b a b^-1 = a^r>."""

    m: int
    n: int
    r: int


@dataclass(frozen=True)
class Generators:
    degree: int
    perms: tuple[Perm, ...]


GroupSpec = Union[Cyclic, Dihedral, Product, Metacyclic, Generators]


def validate_spec(spec: GroupSpec) -> None:
    if isinstance(spec, (Cyclic, Dihedral)):
        if spec.n < 1:
            raise GroupError(f"{type(spec).__name__} needs n >= 1, got {spec.n}")
    elif isinstance(spec, Metacyclic):
        m, n, r = spec.m, spec.n, spec.r
        if m < 1 or n < 1:
            raise GroupError("Metacyclic needs m, n >= 1")
        if math.gcd(m, n * (r - 1)) != 1:
            raise GroupError(f"Metacyclic({m},{n},{r}): gcd(m, n(r-1)) != 1")
        if pow(r, n, m) != 1 % m:
            raise GroupError(f"Metacyclic({m},{n},{r}): r^n != 1 mod m")
    elif isinstance(spec, Product):
        validate_spec(spec.left)
        validate_spec(spec.right)
    elif isinstance(spec, Generators):
        if spec.degree < 1:
            raise GroupError("Generators needs degree >= 1")
        for p in spec.perms:
            if len(p) != spec.degree:
                raise GroupError(
                    f"generator of degree {len(p)} given for degree {spec.degree}"
                )
            if not is_permutation(p):
                raise GroupError(f"not a permutation: {p}")
    else:
        raise GroupError(f"unknown group spec {spec!r}")


def spec_order(spec: GroupSpec) -> int | None:
    """Expected order when it follows from the spec alone."""
    if isinstance(spec, Cyclic):
        return spec.n
    if isinstance(spec, Dihedral):
        return 2 * spec.n
    if isinstance(spec, Metacyclic):
        return spec.m * spec.n
    if isinstance(spec, Product):
        a, b = spec_order(spec.left), spec_order(spec.right)
        return None if a is None or b is None else a * b
    return None


# -- groups -----------------------------------------------------------------


class Group:
    """A finite permutation group with every element enumerated.

    ``elements[0]`` is always the identity. The multiplication table is built
    eagerly; at the default order cap that is at most 512**2 entries.
    """

    def __init__(self, elements: Sequence[Perm], generators: Sequence[int] = (), name: str = ""):
        elements = [tuple(e) for e in elements]
        if not elements:
            raise GroupError("a group needs at least the identity")
        self.degree = len(elements[0])
        if elements[0] != identity_perm(self.degree):
            raise GroupError("element 0 must be the identity")
        self.elements: tuple[Perm, ...] = tuple(elements)
        self.index: dict[Perm, int] = {e: i for i, e in enumerate(elements)}
        if len(self.index) != len(elements):
            raise GroupError("duplicate elements")
        self.order = len(elements)
        self.name = name
        try:
            self.table: tuple[tuple[int, ...], ...] = tuple(
                tuple(self.index[compose(g, h)] for h in elements) for g in elements
            )
            self.inverse_of: tuple[int, ...] = tuple(self.index[invert(g)] for g in elements)
        except KeyError:
            raise GroupError("element list is not closed under composition") from None
        self.generators: tuple[int, ...] = tuple(generators) if generators else tuple(range(1, self.order))
        self.generator_names: dict[int, str] = {}
        self._cache: dict = {}

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        label = self.name or f"degree {self.degree}"
        return f"<Group {label}, order {self.order}>"

    def __eq__(self, other) -> bool:
        return isinstance(other, Group) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    @property
    def identity(self) -> int:
        return 0

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        return self.inverse_of[g]

    def conj(self, g: int, h: int) -> int:
        """g h g^-1."""
        return self.table[self.table[g][h]][self.inverse_of[g]]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inverse_of[g], -k
        result = 0
        base = g
        while k:
            if k & 1:
                result = self.table[result][base]
            base = self.table[base][base]
            k >>= 1
        return result

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = self.table[x][g]
            k += 1
        return k

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(self.table[a][b] == self.table[b][a] for a in gens for b in gens)

    def is_cyclic(self) -> bool:
        return any(self.element_order(g) == self.order for g in range(self.order))

    def index_of(self, perm: Sequence[int]) -> int:
        try:
            return self.index[tuple(perm)]
        except KeyError:
            raise GroupError(f"{tuple(perm)} is not an element of {self!r}") from None

    def check_index(self, g: int) -> None:
        if not 0 <= g < self.order:
            raise IndexError(f"element index {g} out of range for order {self.order}")


def closure(degree: int, gens: Sequence[Perm], order_cap: int = DEFAULT_ORDER_CAP) -> list[Perm]:
    """Breadth-first closure from the identity.

    Each word-length layer is sorted lexicographically by image sequence so
    element indices are reproducible.
    """
    ident = identity_perm(degree)
    gens = [tuple(g) for g in gens]
    seen = {ident}
    out = [ident]
    layer = [ident]
    while layer:
        fresh = set()
        for x in layer:
            for s in gens:
                y = compose(s, x)
                if y not in seen:
                    seen.add(y)
                    fresh.add(y)
        if len(seen) > order_cap:
            raise OrderCapExceeded(f"group order exceeds cap {order_cap}")
        layer = sorted(fresh)
        out.extend(layer)
    return out


def _group_from_gens(degree: int, gens: Sequence[Perm], order_cap: int, name: str) -> Group:
    gens = [tuple(g) for g in gens if tuple(g) != identity_perm(degree)]
    elements = closure(degree, gens, order_cap)
    index = {e: i for i, e in enumerate(elements)}
    gen_idx = sorted({index[g] for g in gens})
    return Group(elements, gen_idx, name=name)


def _regular_from_rule(elements: list, mul, order_cap: int, name: str, gens: list) -> Group:
    """Left-regular permutation representation of an abstractly given group."""
    if len(elements) > order_cap:
        raise OrderCapExceeded(f"group order {len(elements)} exceeds cap {order_cap}")
    pos = {e: i for i, e in enumerate(elements)}
    perms = [tuple(pos[mul(g, x)] for x in elements) for g in gens]
    return _group_from_gens(len(elements), perms, order_cap, name)


def _spec_generators(spec: GroupSpec, order_cap: int) -> tuple[int, list[Perm]] | Group:
    """Degree and generating permutations of the canonical action."""
    if isinstance(spec, Cyclic):
        n = spec.n
        return n, [tuple((i + 1) % n for i in range(n))]
    if isinstance(spec, Dihedral):
        n = spec.n
        if n <= 2:
            # the n-gon action is not faithful here; use the regular action
            elems = [(k, s) for s in (0, 1) for k in range(n)]

            def mul(x, y):
                (k1, s1), (k2, s2) = x, y
                return ((k1 + (-k2 if s1 else k2)) % n, s1 ^ s2)

            return _regular_from_rule(elems, mul, order_cap, "", [(1 % n, 0), (0, 1)])
        rot = tuple((i + 1) % n for i in range(n))
        ref = tuple((-i) % n for i in range(n))
        return n, [rot, ref]
    if isinstance(spec, Metacyclic):
        m, n, r = spec.m, spec.n, spec.r
        # a: x -> x+1 on Z/m; b: x -> r*x on Z/m and an n-cycle on n extra points
        a = tuple((x + 1) % m for x in range(m)) + tuple(range(m, m + n))
        b = tuple((r * x) % m for x in range(m)) + tuple(m + (i + 1) % n for i in range(n))
        return m + n, [a, b]
    if isinstance(spec, Product):
        left = construct(spec.left, order_cap)
        right = construct(spec.right, order_cap)
        dl, dr = left.degree, right.degree
        gens = [left.elements[g] + tuple(dl + x for x in range(dr)) for g in left.generators]
        gens += [tuple(range(dl)) + tuple(dl + x for x in right.elements[g]) for g in right.generators]
        return dl + dr, gens
    if isinstance(spec, Generators):
        return spec.degree, list(spec.perms)
    raise GroupError(f"unknown group spec {spec!r}")


def construct(spec: GroupSpec, order_cap: int = DEFAULT_ORDER_CAP) -> Group:
    """Build the enumerated group described by ``spec``."""
    validate_spec(spec)
    expected = spec_order(spec)
    if expected is not None and expected > order_cap:
        raise OrderCapExceeded(f"group order {expected} exceeds cap {order_cap}")
    name = spec_to_text(spec)
    made = _spec_generators(spec, order_cap)
    if isinstance(made, Group):
        made.name = name
        return made
    degree, gens = made
    G = _group_from_gens(degree, gens, order_cap, name)
    if expected is not None and G.order != expected:
        raise GroupError(f"{name}: canonical action gave order {G.order}, expected {expected}")
    labels = {Cyclic: "a", Dihedral: "st", Metacyclic: "ab"}.get(type(spec))
    if labels:
        for perm, label in zip(gens, labels):
            if perm in G.index and G.index[perm] != 0:
                G.generator_names[G.index[perm]] = label
    return G


def element_words(G: Group) -> list[str]:
    """Shortest word for each element in the named generators ('e' for identity).

    Unnamed generators are called g1, g2, ... in index order. Words read left
    to right as products, so "ts" is t*s.
    """
    if "words" in G._cache:
        return G._cache["words"]
    names = dict(G.generator_names)
    k = 1
    for g in G.generators:
        if g not in names:
            names[g] = f"g{k}"
            k += 1
    gens = sorted(names, key=lambda g: names[g])
    words = [""] * G.order
    words[0] = "e"
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = G.table[x][s]
                if y not in seen:
                    seen.add(y)
                    words[y] = names[s] if x == 0 else words[x] + names[s]
                    nxt.append(y)
        frontier = nxt
    G._cache["words"] = words
    return words


def spec_to_text(spec: GroupSpec) -> str:
    """Canonical DSL form of a spec; parse(spec_to_text(s)) == s."""
    if isinstance(spec, Cyclic):
        return f"C({spec.n})"
    if isinstance(spec, Dihedral):
        return f"D({spec.n})"
    if isinstance(spec, Metacyclic):
        return f"M({spec.m},{spec.n},{spec.r})"
    if isinstance(spec, Product):
        return f"P({spec_to_text(spec.left)},{spec_to_text(spec.right)})"
    if isinstance(spec, Generators):
        perms = ";".join(perm_to_cycles(p) for p in spec.perms)
        return f"gens({spec.degree}" + (f";{perms})" if spec.perms else ")")
    raise GroupError(f"unknown group spec {spec!r}")


# -- conjugacy --------------------------------------------------------------


@dataclass(frozen=True)
class ConjClass:
    representative: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def conjugacy_classes(G: Group) -> list[ConjClass]:
    """Classes ordered by minimal member index, so the identity class is first."""
    if "classes" in G._cache:
        return G._cache["classes"]
    seen = [False] * G.order
    classes = []
    for g in range(G.order):
        if seen[g]:
            continue
        members = sorted({G.conj(x, g) for x in range(G.order)})
        for h in members:
            seen[h] = True
        classes.append(ConjClass(members[0], tuple(members)))
    G._cache["classes"] = classes
    return classes


def class_index_map(G: Group) -> list[int]:
    """Element index -> position of its conjugacy class."""
    if "class_of" not in G._cache:
        out = [0] * G.order
        for i, c in enumerate(conjugacy_classes(G)):
            for g in c.members:
                out[g] = i
        G._cache["class_of"] = out
    return G._cache["class_of"]


def centralizer(G: Group, g: int) -> list[int]:
    G.check_index(g)
    return [h for h in range(G.order) if G.table[h][g] == G.table[g][h]]
