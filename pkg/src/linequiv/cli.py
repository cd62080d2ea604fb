"""Command-line front end.

Every subcommand produces a report dict. ``--json`` prints it with sorted keys
(byte-identical for identical command and seed); otherwise a short text
rendering is printed. Exit codes: 0 success, 1 verification-negative result,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import shlex
import sys
from dataclasses import dataclass, replace
from fractions import Fraction

from .burnside import kernel_basis, orbit_size_profile, sunada_pairs, satisfies_sunada_condition
from .constructions import find_unbalanced_pair
from .groups import (
    DEFAULT_ORDER_CAP,
    Group,
    GroupError,
    GroupSpec,
    conjugacy_classes,
    construct,
    element_words,
    perm_to_cycles,
    spec_to_text,
)
from .gsets import (
    GSet,
    GSetError,
    from_orbit_type,
    linearly_equivalent,
    orbit_decomposition,
    orbit_sizes,
    perm_character,
)
from .parsing import ParseError, gset_expr_text, parse_group_spec, parse_gset_expr
from .spectral import (
    adjacency_char_poly,
    hecke_check,
    random_generating_multiset,
    schreier_adjacency,
)
from .subgroups import all_subgroups, are_conjugate, subgroup_classes

SCHEMA_VERSION = 1
DEFAULT_TRIALS = 10

GROUP_COMMANDS = ("info", "subgroups", "kernel", "pairs", "find-unbalanced", "sunada", "verify", "schreier")
COMMANDS = GROUP_COMMANDS + ("tori",)


class UsageError(ValueError):
    pass


# -- commands ---------------------------------------------------------------


@dataclass(frozen=True)
class Command:
    """A parsed invocation with every argument in canonical form."""

    name: str
    group: GroupSpec | None = None
    x: str | None = None
    y: str | None = None
    pair: str | None = None
    gens: str | None = None
    trials: int | None = None
    p: int | None = None
    bound: int | None = None
    seed: int = 0
    json: bool = False
    order_cap: int = DEFAULT_ORDER_CAP

    def argv(self) -> list[str]:
        out = [self.name]
        if self.group is not None:
            out.append(spec_to_text(self.group))
        for flag, value in (
            ("--x", self.x),
            ("--y", self.y),
            ("--pair", self.pair),
            ("--gens", self.gens),
            ("--trials", self.trials),
            ("--p", self.p),
            ("--bound", self.bound),
        ):
            if value is not None:
                out += [flag, str(value)]
        if self.seed:
            out += ["--seed", str(self.seed)]
        if self.order_cap != DEFAULT_ORDER_CAP:
            out += ["--order-cap", str(self.order_cap)]
        if self.json:
            out.append("--json")
        return out

    def to_string(self) -> str:
        return shlex.join(self.argv())

    @classmethod
    def from_string(cls, text: str) -> "Command":
        return parse_command(shlex.split(text))


def _canonical_expr(text: str) -> str:
    return gset_expr_text(parse_gset_expr(text))


def _split_pair(text: str) -> tuple[str, str]:
    if text.count("~") != 1:
        raise UsageError("a pair expression needs exactly one '~', e.g. 'coset(1) ~ coset(2)'")
    left, right = text.split("~")
    try:
        parse_gset_expr(left)
    except ParseError as e:
        raise ParseError(str(e).rsplit(" (at byte", 1)[0], e.offset) from None
    try:
        parse_gset_expr(right)
    except ParseError as e:
        shift = len((left + "~").encode())
        raise ParseError(str(e).rsplit(" (at byte", 1)[0], e.offset + shift) from None
    return left, right


def _canonical_pair(text: str) -> str:
    text = text.strip()
    if text.isdigit():
        return str(int(text))
    if text == "unbalanced":
        return text
    left, right = _split_pair(text)
    return f"{_canonical_expr(left)} ~ {_canonical_expr(right)}"


def _canonical_gens(text: str, default_seed: int) -> str:
    text = text.strip()
    if text.startswith("random:"):
        fields = text.split(":")[1:]
        if not 1 <= len(fields) <= 2 or not all(f.strip().isdigit() for f in fields):
            raise UsageError("expected random:k or random:k:seed")
        k = int(fields[0])
        seed = int(fields[1]) if len(fields) == 2 else default_seed
        if k < 1:
            raise UsageError("random:k needs k >= 1")
        return f"random:{k}:{seed}"
    parts = [s.strip() for s in text.split(",")]
    if not parts or not all(s.isdigit() for s in parts):
        raise UsageError("--gens takes random:k[:seed] or a comma list of element indices")
    return ",".join(str(int(s)) for s in parts)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized harnesses")
    common.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP)

    parser = argparse.ArgumentParser(
        prog="linequiv",
        description="Linearly equivalent G-sets and unbalanced pairs for small finite groups.",
    )
    sub = parser.add_subparsers(dest="name", required=True)
    helps = {
        "info": "group order, generators and conjugacy classes",
        "subgroups": "conjugacy classes of subgroups (the canonical basis)",
        "kernel": "reduced basis of the linearly trivial lattice",
        "pairs": "reduced pairs from the kernel basis, with unbalanced flags",
        "find-unbalanced": "construct an unbalanced pair (none for cyclic groups)",
        "sunada": "pairs of non-conjugate subgroups with equal characters",
        "verify": "check linear equivalence of two G-set expressions",
        "schreier": "compare Schreier graph spectra of a pair",
    }
    for name in GROUP_COMMANDS:
        sp = sub.add_parser(name, parents=[common], help=helps[name])
        sp.add_argument("group", help="group spec, e.g. D(6) or 'gens(4; (0,1,2); (0,1))'")
        if name == "verify":
            sp.add_argument("--x", required=True, help="G-set expression, e.g. '2*coset(1) + coset(4)'")
            sp.add_argument("--y", required=True)
        if name == "schreier":
            sp.add_argument("--pair", required=True, help="kernel pair id, 'unbalanced', or 'EXPR ~ EXPR'")
            sp.add_argument("--gens", required=True, help="random:k[:seed] or comma list of element indices")
            sp.add_argument("--trials", type=int, default=None)
    tp = sub.add_parser("tori", parents=[common], help="Hecke torus forms: representation counts")
    tp.add_argument("--p", type=int, required=True)
    tp.add_argument("--bound", type=int, default=10000)
    return parser


def parse_command(argv: list[str]) -> Command:
    """Parse argv into a canonical Command. Raises UsageError or ParseError."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        raise UsageError("invalid arguments") from e
    if ns.order_cap < 1:
        raise UsageError("--order-cap must be positive")
    if not 0 <= ns.seed < 2**64:
        raise UsageError("--seed must be an unsigned 64-bit integer")
    cmd = Command(name=ns.name, seed=ns.seed, json=ns.json, order_cap=ns.order_cap)
    if ns.name in GROUP_COMMANDS:
        cmd = replace(cmd, group=parse_group_spec(ns.group))
    if ns.name == "verify":
        cmd = replace(cmd, x=_canonical_expr(ns.x), y=_canonical_expr(ns.y))
    elif ns.name == "schreier":
        gens = _canonical_gens(ns.gens, ns.seed)
        trials = ns.trials
        if trials is None:
            trials = DEFAULT_TRIALS if gens.startswith("random:") else 1
        if trials < 1:
            raise UsageError("--trials must be positive")
        cmd = replace(cmd, pair=_canonical_pair(ns.pair), gens=gens, trials=trials)
    elif ns.name == "tori":
        if ns.p < 2:
            raise UsageError("--p must be at least 2")
        if ns.bound < 0:
            raise UsageError("--bound must be non-negative")
        cmd = replace(cmd, p=ns.p, bound=ns.bound)
    return cmd


# -- helpers ----------------------------------------------------------------


def compact_word(word: str) -> str:
    """'ssst' -> 's^3t'."""
    out = []
    for ch, run in itertools.groupby(word):
        n = len(list(run))
        out.append(ch if n == 1 else f"{ch}^{n}")
    return "".join(out)


def _word(G: Group, g: int) -> str:
    return compact_word(element_words(G)[g])


def _subgroup_record(G: Group, index: int, cls) -> dict:
    H = cls.representative
    return {
        "index": index,
        "order": H.order,
        "class_size": cls.class_size,
        "generators": [perm_to_cycles(G.elements[g]) for g in H.gens],
        "words": [_word(G, g) for g in H.gens],
    }


def _expr_of(X: GSet) -> str:
    return gset_expr_text(orbit_decomposition(X).as_dict())


def _gset(G: Group, expr: str) -> GSet:
    counts = parse_gset_expr(expr, len(subgroup_classes(G)))
    return from_orbit_type(G, counts)


def _group_header(cmd: Command, G: Group) -> dict:
    return {"spec": spec_to_text(cmd.group), "order": G.order, "degree": G.degree}


def _profile(G: Group, v) -> dict[str, int]:
    return {str(k): m for k, m in sorted(orbit_size_profile(G, v).items())}


# -- subcommands ------------------------------------------------------------


def _info(cmd: Command, G: Group) -> tuple[dict, int]:
    classes = conjugacy_classes(G)
    result = {
        "abelian": G.is_abelian(),
        "cyclic": G.is_cyclic(),
        "generators": [
            {"cycles": perm_to_cycles(G.elements[g]), "word": _word(G, g)} for g in G.generators
        ],
        "conjugacy_classes": [
            {
                "representative": perm_to_cycles(G.elements[c.representative]),
                "word": _word(G, c.representative),
                "size": c.size,
                "element_order": G.element_order(c.representative),
            }
            for c in classes
        ],
        "subgroup_count": len(all_subgroups(G, cmd.order_cap)),
        "subgroup_class_count": len(subgroup_classes(G, cmd.order_cap)),
    }
    return result, 0


def _subgroups(cmd: Command, G: Group) -> tuple[dict, int]:
    classes = subgroup_classes(G, cmd.order_cap)
    return {
        "subgroup_count": len(all_subgroups(G, cmd.order_cap)),
        "classes": [_subgroup_record(G, i, c) for i, c in enumerate(classes)],
    }, 0


def _kernel(cmd: Command, G: Group) -> tuple[dict, int]:
    classes = subgroup_classes(G, cmd.order_cap)
    basis = kernel_basis(G)
    return {
        "class_orders": [c.order for c in classes],
        "rank": len(basis),
        "basis": basis,
    }, 0


def _pairs(cmd: Command, G: Group) -> tuple[dict, int]:
    subgroup_classes(G, cmd.order_cap)
    records = []
    for i, v in enumerate(kernel_basis(G)):
        pos = {j: x for j, x in enumerate(v) if x > 0}
        neg = {j: -x for j, x in enumerate(v) if x < 0}
        profile = _profile(G, v)
        records.append({
            "id": i,
            "vector": v,
            "x": gset_expr_text(pos),
            "y": gset_expr_text(neg),
            "unbalanced": bool(profile),
            "orbit_size_difference": profile,
        })
    return {"pairs": records, "unbalanced_count": sum(r["unbalanced"] for r in records)}, 0


def _find_unbalanced(cmd: Command, G: Group) -> tuple[dict, int]:
    subgroup_classes(G, cmd.order_cap)
    pair = find_unbalanced_pair(G)
    if pair is None:
        return {"pair": None, "reason": "group is cyclic"}, 0
    return {
        "pair": {
            "x": _expr_of(pair.X),
            "y": _expr_of(pair.Y),
            "x_orbit_sizes": orbit_sizes(pair.X),
            "y_orbit_sizes": orbit_sizes(pair.Y),
            "x_size": pair.X.size,
            "provenance": list(pair.provenance),
        }
    }, 0


def _sunada(cmd: Command, G: Group) -> tuple[dict, int]:
    classes = subgroup_classes(G, cmd.order_cap)
    found = []
    for i, j in sunada_pairs(G):
        H, K = classes[i].representative, classes[j].representative
        found.append({
            "h": _subgroup_record(G, i, classes[i]),
            "k": _subgroup_record(G, j, classes[j]),
            "conjugate": are_conjugate(G, H, K) is not None,
            "class_counts_equal": satisfies_sunada_condition(G, H, K),
        })
    return {"pairs": found}, 0


def _verify(cmd: Command, G: Group) -> tuple[dict, int]:
    X, Y = _gset(G, cmd.x), _gset(G, cmd.y)
    equivalent = linearly_equivalent(X, Y)
    sx, sy = orbit_sizes(X), orbit_sizes(Y)
    result = {
        "x": cmd.x,
        "y": cmd.y,
        "x_character": list(perm_character(X)),
        "y_character": list(perm_character(Y)),
        "linearly_equivalent": equivalent,
        "x_orbit_sizes": sx,
        "y_orbit_sizes": sy,
        "unbalanced": equivalent and sx != sy,
    }
    return result, 0 if equivalent else 1


def _resolve_pair(cmd: Command, G: Group) -> tuple[GSet, GSet, str]:
    if cmd.pair.isdigit():
        basis = kernel_basis(G)
        i = int(cmd.pair)
        if i >= len(basis):
            raise UsageError(f"pair id {i} out of range: kernel rank is {len(basis)}")
        v = basis[i]
        x = gset_expr_text({j: c for j, c in enumerate(v) if c > 0})
        y = gset_expr_text({j: -c for j, c in enumerate(v) if c < 0})
        return _gset(G, x), _gset(G, y), f"{x} ~ {y}"
    if cmd.pair == "unbalanced":
        pair = find_unbalanced_pair(G)
        if pair is None:
            raise UsageError("group is cyclic: it has no unbalanced pair")
        return pair.X, pair.Y, f"{_expr_of(pair.X)} ~ {_expr_of(pair.Y)}"
    left, right = (s.strip() for s in cmd.pair.split("~"))
    return _gset(G, left), _gset(G, right), cmd.pair


def _multisets(cmd: Command, G: Group) -> list[list[int]]:
    if cmd.gens.startswith("random:"):
        _, k, seed = cmd.gens.split(":")
        rng = random.Random(int(seed))
        return [random_generating_multiset(G, int(k), rng) for _ in range(cmd.trials)]
    S = [int(s) for s in cmd.gens.split(",")]
    for s in S:
        if s >= G.order:
            raise UsageError(f"element index {s} out of range 0..{G.order - 1}")
    return [S] * cmd.trials


def _schreier(cmd: Command, G: Group) -> tuple[dict, int]:
    subgroup_classes(G, cmd.order_cap)
    X, Y, label = _resolve_pair(cmd, G)
    if X.size == 0 and Y.size == 0:
        raise UsageError("both sides are empty")
    trials = []
    for S in _multisets(cmd, G):
        px = adjacency_char_poly(schreier_adjacency(X, S))
        py = adjacency_char_poly(schreier_adjacency(Y, S))
        trials.append({"multiset": S, "cospectral": px == py, "x_char_poly": px, "y_char_poly": py})
    ok = all(t["cospectral"] for t in trials)
    return {
        "pair": label,
        "linearly_equivalent": linearly_equivalent(X, Y),
        "trials": trials,
        "all_cospectral": ok,
    }, 0 if ok else 1


def _frac(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def _tori(cmd: Command) -> tuple[dict, int]:
    v = hecke_check(cmd.p, cmd.bound)

    def forms(fs):
        return [
            {"gram": [[_frac(e) for e in row] for row in f.gram], "reduced": [_frac(e) for e in f.reduced()]}
            for f in fs
        ]

    return {
        "p": v.p,
        "bound": v.bound,
        "equal": v.equal,
        "witness": _frac(v.witness),
        "x_count": v.x_count,
        "y_count": v.y_count,
        "x_forms": forms(v.x_forms),
        "y_forms": forms(v.y_forms),
    }, 0 if v.equal else 1


HANDLERS = {
    "info": _info,
    "subgroups": _subgroups,
    "kernel": _kernel,
    "pairs": _pairs,
    "find-unbalanced": _find_unbalanced,
    "sunada": _sunada,
    "verify": _verify,
    "schreier": _schreier,
}


def run(cmd: Command) -> tuple[dict, int]:
    """Execute a command, returning (report, exit code)."""
    report = {"schema_version": SCHEMA_VERSION, "command": cmd.to_string(), "seed": cmd.seed}
    if cmd.name == "tori":
        result, code = _tori(cmd)
    else:
        G = construct(cmd.group, cmd.order_cap)
        report["group"] = _group_header(cmd, G)
        result, code = HANDLERS[cmd.name](cmd, G)
    report["result"] = result
    return report, code


# -- text rendering ---------------------------------------------------------


def _fmt_sub(rec: dict) -> str:
    gens = ", ".join(rec["words"]) or "e"
    return f"[{rec['index']}] order {rec['order']}, {rec['class_size']} conjugate(s), <{gens}>"


def render_text(cmd: Command, report: dict) -> str:
    r = report["result"]
    lines = []
    if "group" in report:
        g = report["group"]
        lines.append(f"{g['spec']}: order {g['order']}, degree {g['degree']}")
    name = cmd.name
    if name == "info":
        lines.append(f"abelian: {r['abelian']}, cyclic: {r['cyclic']}")
        for gen in r["generators"]:
            lines.append(f"  generator {gen['word']} = {gen['cycles']}")
        lines.append(f"{len(r['conjugacy_classes'])} conjugacy classes:")
        for c in r["conjugacy_classes"]:
            lines.append(f"  {c['word']:>10}  size {c['size']}, element order {c['element_order']}")
        lines.append(f"{r['subgroup_count']} subgroups in {r['subgroup_class_count']} classes")
    elif name == "subgroups":
        lines.append(f"{r['subgroup_count']} subgroups in {len(r['classes'])} classes")
        lines += ["  " + _fmt_sub(c) for c in r["classes"]]
    elif name == "kernel":
        lines.append(f"class orders: {r['class_orders']}")
        lines.append(f"rank {r['rank']}")
        lines += [f"  {v}" for v in r["basis"]]
    elif name == "pairs":
        for p in r["pairs"]:
            flag = "unbalanced" if p["unbalanced"] else "balanced"
            lines.append(f"  [{p['id']}] {p['x']}  ~  {p['y']}  ({flag})")
        lines.append(f"{r['unbalanced_count']} of {len(r['pairs'])} basis pairs are unbalanced")
    elif name == "find-unbalanced":
        if r["pair"] is None:
            lines.append("none (group is cyclic)")
        else:
            p = r["pair"]
            lines.append(f"X = {p['x']}  orbit sizes {p['x_orbit_sizes']}")
            lines.append(f"Y = {p['y']}  orbit sizes {p['y_orbit_sizes']}")
            lines.append("via " + " <- ".join(p["provenance"]))
    elif name == "sunada":
        if not r["pairs"]:
            lines.append("no Sunada pairs")
        for p in r["pairs"]:
            lines.append(f"  {_fmt_sub(p['h'])}")
            lines.append(f"    ~ {_fmt_sub(p['k'])}")
    elif name == "verify":
        lines.append(f"X = {r['x']}: character {r['x_character']}, orbit sizes {r['x_orbit_sizes']}")
        lines.append(f"Y = {r['y']}: character {r['y_character']}, orbit sizes {r['y_orbit_sizes']}")
        verdict = "linearly equivalent" if r["linearly_equivalent"] else "NOT linearly equivalent"
        if r["unbalanced"]:
            verdict += ", unbalanced"
        lines.append(verdict)
    elif name == "schreier":
        lines.append(f"pair {r['pair']} (linearly equivalent: {r['linearly_equivalent']})")
        for i, t in enumerate(r["trials"]):
            lines.append(f"  trial {i}: |S| = {len(t['multiset'])}, cospectral: {t['cospectral']}")
        lines.append("all cospectral" if r["all_cospectral"] else "spectra differ")
    elif name == "tori":
        for side in ("x", "y"):
            forms = ", ".join("(" + ",".join(f["reduced"]) + ")" for f in r[f"{side}_forms"])
            lines.append(f"{side.upper()} forms (reduced a,b,c): {forms}")
        if r["equal"]:
            lines.append(f"representation counts agree up to {r['bound']}")
        else:
            lines.append(
                f"counts differ at value {r['witness']}: X has {r['x_count']}, Y has {r['y_count']}"
            )
    return "\n".join(lines)


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cmd = parse_command(argv)
    except UsageError as e:
        if isinstance(e.__cause__, SystemExit):
            # argparse already printed usage or help
            return 0 if e.__cause__.code == 0 else 2
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    try:
        report, code = run(cmd)
    except (UsageError, ParseError, GroupError, GSetError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(render_json(report) if cmd.json else render_text(cmd, report))
    return code


if __name__ == "__main__":
    sys.exit(main())
