"""Parsers for the group-spec DSL and G-set expressions.

Group specs::

    C(n) | D(n) | M(m,n,r) | P(spec,spec) | gens(deg; perm; perm; ...)

where a perm is cycle notation on 0-based points, e.g. ``(0,1,2)(3,4)`` or
``()``. G-set expressions::

    expr := term ('+' term)*
    term := [k '*'] atom | '0'
    atom := 'coset(' i ')' | '(' expr ')'

``0`` is the empty G-set.

Whitespace is ignored. Errors report the byte offset of the offending token.
"""

from __future__ import annotations

from collections import Counter

from .groups import (
    Cyclic,
    Dihedral,
    Generators,
    GroupError,
    GroupSpec,
    Metacyclic,
    Product,
    perm_from_cycles,
    validate_spec,
)


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def byte_offset(self, pos: int | None = None) -> int:
        return len(self.text[: self.pos if pos is None else pos].encode())

    def error(self, message: str, pos: int | None = None) -> ParseError:
        return ParseError(message, self.byte_offset(pos))

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token: str) -> bool:
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.accept(token):
            found = self.peek() or "end of input"
            raise self.error(f"expected {token!r}, found {found!r}")

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start : self.pos]
        if digits in ("", "-"):
            self.pos = start
            raise self.error("expected an integer")
        return int(digits)

    def word(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalpha()):
            self.pos += 1
        return self.text[start : self.pos]

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)


def _parse_perm(sc: _Scanner, degree: int):
    sc.skip()
    start = sc.pos
    cycles = []
    sc.expect("(")
    if not sc.accept(")"):
        while True:
            cyc = [sc.integer()]
            while sc.accept(","):
                cyc.append(sc.integer())
            sc.expect(")")
            cycles.append(cyc)
            if sc.peek() != "(":
                break
            sc.expect("(")
    try:
        return perm_from_cycles(degree, cycles)
    except GroupError as e:
        raise sc.error(str(e), start) from None


def _parse_spec(sc: _Scanner) -> GroupSpec:
    sc.skip()
    start = sc.pos
    name = sc.word()
    if name in ("C", "D"):
        sc.expect("(")
        n = sc.integer()
        sc.expect(")")
        spec: GroupSpec = Cyclic(n) if name == "C" else Dihedral(n)
    elif name == "M":
        sc.expect("(")
        m = sc.integer()
        sc.expect(",")
        n = sc.integer()
        sc.expect(",")
        r = sc.integer()
        sc.expect(")")
        spec = Metacyclic(m, n, r)
    elif name == "P":
        sc.expect("(")
        left = _parse_spec(sc)
        sc.expect(",")
        right = _parse_spec(sc)
        sc.expect(")")
        spec = Product(left, right)
    elif name == "gens":
        sc.expect("(")
        degree = sc.integer()
        if degree < 1:
            raise sc.error("degree must be positive", start)
        perms = []
        while sc.accept(";"):
            perms.append(_parse_perm(sc, degree))
        sc.expect(")")
        spec = Generators(degree, tuple(perms))
    else:
        raise sc.error(f"unknown group constructor {name!r}" if name else "expected a group spec", start)
    try:
        validate_spec(spec)
    except GroupError as e:
        raise sc.error(str(e), start) from None
    return spec


def parse_group_spec(text: str) -> GroupSpec:
    if not text or not text.strip():
        raise ParseError("empty group spec", 0)
    sc = _Scanner(text)
    spec = _parse_spec(sc)
    if not sc.at_end():
        raise sc.error("trailing input after group spec")
    return spec


def _parse_expr(sc: _Scanner, n_classes: int | None) -> Counter:
    total = _parse_term(sc, n_classes)
    while sc.accept("+"):
        total.update(_parse_term(sc, n_classes))
    return total


def _parse_term(sc: _Scanner, n_classes: int | None) -> Counter:
    k = 1
    if sc.peek().isdigit():
        k = sc.integer()
        if k == 0 and sc.peek() != "*":
            return Counter()
        sc.expect("*")
    inner = _parse_atom(sc, n_classes)
    return Counter({i: k * m for i, m in inner.items()})


def _parse_atom(sc: _Scanner, n_classes: int | None) -> Counter:
    if sc.accept("("):
        inner = _parse_expr(sc, n_classes)
        sc.expect(")")
        return inner
    sc.skip()
    start = sc.pos
    if sc.word() != "coset":
        raise sc.error("expected 'coset(i)' or '('", start)
    sc.expect("(")
    idx_pos = sc.pos
    i = sc.integer()
    if i < 0 or (n_classes is not None and i >= n_classes):
        raise sc.error(f"subgroup class index {i} out of range", idx_pos)
    sc.expect(")")
    return Counter({i: 1})


def parse_gset_expr(text: str, n_classes: int | None = None) -> dict[int, int]:
    """Map subgroup-class index -> multiplicity."""
    if not text or not text.strip():
        raise ParseError("empty G-set expression", 0)
    sc = _Scanner(text)
    out = _parse_expr(sc, n_classes)
    if not sc.at_end():
        raise sc.error("trailing input after G-set expression")
    return {i: m for i, m in sorted(out.items()) if m}


def gset_expr_text(counts: dict[int, int]) -> str:
    """Canonical expression for a multiplicity map; the empty G-set is '0'."""
    parts = []
    for i, m in sorted(counts.items()):
        if m == 1:
            parts.append(f"coset({i})")
        elif m > 1:
            parts.append(f"{m}*coset({i})")
    return " + ".join(parts) or "0"
