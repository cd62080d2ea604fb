"""Spectral checks on two finite surrogates: Schreier graphs and flat tori.

Schreier graphs: the adjacency operator of a G-set under a generating
multiset S is the action of sum(S) on C[X], so linearly equivalent G-sets
give equal characteristic polynomials. Flat tori: the Laplace spectrum of
R^2/L is |w|^2 over the dual lattice L*, so comparing unions of tori reduces
to comparing representation numbers of binary quadratic forms.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, lcm
from typing import Sequence

from sympy import isprime

from .groups import Group
from .gsets import GSet
from .intlinalg import char_poly, hermite_basis_2d, poly_mul
from .subgroups import generated

# -- Schreier graphs ---------------------------------------------------------


def symmetrize(G: Group, S: Sequence[int]) -> list[int]:
    """S itself if it is inverse-closed as a multiset, else S plus inverses."""
    for s in S:
        G.check_index(s)
    if Counter(S) == Counter(G.inv(s) for s in S):
        return list(S)
    return list(S) + [G.inv(s) for s in S]


def schreier_adjacency(X: GSet, S: Sequence[int]) -> list[list[int]]:
    """A[x][y] = #{s in S : s x = y}."""
    S = symmetrize(X.group, S)
    n = X.size
    A = [[0] * n for _ in range(n)]
    for s in S:
        row = X.action[s]
        for x in range(n):
            A[x][row[x]] += 1
    return A


def components(A: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(A)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        for x in comp:
            for y in range(n):
                if (A[x][y] or A[y][x]) and not seen[y]:
                    seen[y] = True
                    comp.append(y)
        out.append(sorted(comp))
    return out


def adjacency_char_poly(A: Sequence[Sequence[int]]) -> list[int]:
    """Characteristic polynomial as the product over connected components."""
    poly = [1]
    for comp in components(A):
        block = [[A[i][j] for j in comp] for i in comp]
        poly = poly_mul(poly, char_poly(block))
    return poly


def cospectral(X: GSet, Y: GSet, S: Sequence[int]) -> bool:
    if X.group != Y.group:
        raise ValueError("G-sets over different groups")
    return adjacency_char_poly(schreier_adjacency(X, S)) == adjacency_char_poly(
        schreier_adjacency(Y, S)
    )


def random_generating_multiset(G: Group, k: int, rng: random.Random, attempts: int = 100) -> list[int]:
    """k random elements plus their inverses, resampled until they generate G."""
    S: list[int] = []
    for _ in range(attempts):
        picks = [rng.randrange(G.order) for _ in range(k)]
        S = picks + [G.inv(s) for s in picks]
        if generated(G, S).order == G.order:
            return S
    # too few draws to generate: append the group's own generators
    extra = list(G.generators)
    return S + extra + [G.inv(s) for s in extra]


# -- flat tori ---------------------------------------------------------------


@dataclass(frozen=True)
class QForm:
    """Binary form q(m, n) = a m^2 + 2 b m n + c n^2 with Gram [[a, b], [b, c]]."""

    a: Fraction
    b: Fraction
    c: Fraction
    label: str = field(default="", compare=False)

    def __post_init__(self):
        for name in "abc":
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not (self.a > 0 and self.det > 0):
            raise ValueError(f"form {self.gram} is not positive definite")

    @property
    def det(self) -> Fraction:
        return self.a * self.c - self.b * self.b

    @property
    def gram(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        return ((self.a, self.b), (self.b, self.c))

    def __call__(self, m: int, n: int) -> Fraction:
        return self.a * m * m + 2 * self.b * m * n + self.c * n * n

    def transform(self, U: Sequence[Sequence[int]]) -> "QForm":
        """The form U^T Gram U."""
        (p, q), (r, s) = U
        a, b, c = self.a, self.b, self.c
        return QForm(
            a * p * p + 2 * b * p * r + c * r * r,
            a * p * q + b * (p * s + q * r) + c * r * s,
            a * q * q + 2 * b * q * s + c * s * s,
            self.label,
        )

    def reduced(self) -> tuple[Fraction, Fraction, Fraction]:
        """Canonical (a, b, c) under GL2(Z) equivalence: 0 <= 2b <= a <= c.

        Gauss reduction handles SL2(Z); the reflection (m, n) -> (m, -n) then
        makes b non-negative.
        """
        a, b, c = self.a, self.b, self.c
        while True:
            # shift n -> n + t m to bring |b| <= a/2
            t = -((2 * b + a) // (2 * a)) if a else 0
            b, c = b + t * a, c + 2 * t * b + t * t * a
            if a > c:
                a, c, b = c, a, -b
                continue
            break
        return a, abs(b), c


def _common_denominator(forms: Sequence[QForm]) -> int:
    d = 1
    for f in forms:
        for x in (f.a, f.b, f.c):
            d = lcm(d, x.denominator)
    return d


@dataclass(frozen=True)
class RepCounts:
    """counts[t] = number of (form, m, n) with q(m, n) = t / denominator, t <= bound * denominator."""

    counts: tuple[int, ...]
    denominator: int = 1

    def at(self, value) -> int:
        t = Fraction(value) * self.denominator
        if t.denominator != 1 or not 0 <= t < len(self.counts):
            return 0
        return self.counts[int(t)]


def representation_counts(forms: Sequence[QForm], bound: int, denominator: int | None = None) -> RepCounts:
    """Total representation numbers of all values up to ``bound``.

    Enumeration limits come from completing the square: a*q(m, n) >= det*n^2
    and c*q(m, n) >= det*m^2, evaluated exactly.
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    D = denominator or _common_denominator(forms)
    top = bound * D
    counts = [0] * (top + 1)
    for f in forms:
        a, b, c = (int(x * D) for x in (f.a, f.b, f.c))
        for x in (f.a * D, f.b * D, f.c * D):
            if x.denominator != 1:
                raise ValueError("denominator does not clear the form")
        det = a * c - b * b
        # a*q >= det*n^2 and c*q >= det*m^2 (scaled form, det scaled by D^2, q by D)
        n_max = isqrt(a * top // det)
        m_max = isqrt(c * top // det)
        for m in range(-m_max, m_max + 1):
            am2 = a * m * m
            bm2 = 2 * b * m
            for n in range(-n_max, n_max + 1):
                v = am2 + bm2 * n + c * n * n
                if v <= top:
                    counts[v] += 1
    return RepCounts(tuple(counts), D)


def torus_quotient_form(p: int, H_gens: Sequence[Sequence[int]]) -> QForm:
    """Dual-lattice form of R^2 / (Z^2 + (1/p) H).

    H is a subgroup of (Z/p)^2 given by generators (x, y); the torus is
    R^2/Z^2 with (x, y) acting as translation by (x/p, y/p). The returned form
    lists the Laplace eigenvalues of the quotient torus divided by 4 pi^2.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    vecs = [[p, 0], [0, p]] + [[x % p, y % p] for x, y in H_gens]
    B = hermite_basis_2d(vecs)  # basis of p * L as rows
    # L = B / p; dual basis rows are p * B^{-T}; Gram of dual = p^2 (B B^T)^{-1}
    (b11, b12), (b21, b22) = B
    g11 = b11 * b11 + b12 * b12
    g12 = b11 * b21 + b12 * b22
    g22 = b21 * b21 + b22 * b22
    det = g11 * g22 - g12 * g12
    s = Fraction(p * p, det)
    label = "H=<" + ",".join(f"({x % p},{y % p})" for x, y in H_gens) + ">"
    return QForm(s * g22, -s * g12, s * g11, label)


def hecke_subgroups(p: int) -> list[list[tuple[int, int]]]:
    """Generators of H_lambda = {(x, lambda x)} for lambda = 0..p-1 and H_inf = {(0, x)}."""
    return [[(1, lam)] for lam in range(p)] + [[(0, 1)]]


def hecke_forms(p: int) -> tuple[list[QForm], list[QForm]]:
    """X side: the quotients by H_lambda; Y side: the torus itself plus p copies of T/G."""
    xs = [torus_quotient_form(p, H) for H in hecke_subgroups(p)]
    full = torus_quotient_form(p, [(1, 0), (0, 1)])
    ys = [torus_quotient_form(p, [])] + [full] * p
    return xs, ys


@dataclass(frozen=True)
class HeckeVerdict:
    p: int
    bound: int
    equal: bool
    witness: Fraction | None
    x_count: int | None = None
    y_count: int | None = None
    x_forms: tuple = ()
    y_forms: tuple = ()


def hecke_check(p: int, bound: int = 10000) -> HeckeVerdict:
    xs, ys = hecke_forms(p)
    D = _common_denominator(xs + ys)
    cx = representation_counts(xs, bound, D)
    cy = representation_counts(ys, bound, D)
    for t, (u, v) in enumerate(zip(cx.counts, cy.counts)):
        if u != v:
            return HeckeVerdict(p, bound, False, Fraction(t, D), u, v, tuple(xs), tuple(ys))
    return HeckeVerdict(p, bound, True, None, None, None, tuple(xs), tuple(ys))


def is_prime(p: int) -> bool:
    return bool(isprime(p))
