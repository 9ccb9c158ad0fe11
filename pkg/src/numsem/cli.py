"""Command-line frontend: one verb per library operation.

Output is byte-deterministic for fixed inputs.  Exit codes: 0 success,
1 domain error (the error class name is printed to stderr), 2 usage
error (argparse).  ``--output PATH`` writes exactly the bytes that
would have gone to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from .core import NumericalSemigroup, proportionally_modular
from .doubles import build_double, doubles_bounded, upper_m_sets
from .errors import SemigroupError
from .oracle import all_semigroups_up_to, doubles_oracle, extension_oracle
from .tree import ALL_SEMIGROUPS, VarietyTree, depth_predicate, enumerate_tree, export_tree
from .varieties import arithmetic_extensions, is_arithmetic_extension, monoid_hull, smallest_variety


def _generators(text: str) -> list[int]:
    try:
        parts = [int(p) for p in text.split(",") if p]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated positive integers, got {text!r}"
        )
    if not parts or min(parts) < 1:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated positive integers, got {text!r}"
        )
    return parts


def _element_list(text: str) -> list[int]:
    if text == "":
        return []
    try:
        parts = [int(p) for p in text.split(",") if p]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated nonnegative integers, got {text!r}"
        )
    if parts and min(parts) < 0:
        raise argparse.ArgumentTypeError("elements must be nonnegative")
    return parts


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _semigroup_text(s: NumericalSemigroup) -> str:
    return (
        f"{s} F={s.frobenius} m={s.multiplicity} g={s.genus}"
        f" e={s.embedding_dimension} depth={s.depth()}"
        f" gaps={','.join(map(str, s.gaps))}\n"
    )


def _render_semigroup(s: NumericalSemigroup, fmt: str) -> str:
    if fmt == "json":
        return _json_text(s.to_json_dict())
    return str(s) + "\n"


def _render_family(members, fmt: str) -> str:
    if fmt == "json":
        return _json_text({"members": [s.to_json_dict() for s in members]})
    return "".join(str(s) + "\n" for s in members)


def _double_line(m: int, upper_set, t: NumericalSemigroup) -> str:
    h = ",".join(map(str, sorted(upper_set)))
    return f"S({m}; {h}) = {t} F={t.frobenius}\n"


def _tree_text(tree: VarietyTree) -> str:
    lines: list[str] = []

    def walk(node, level):
        lines.append("  " * level + str(node) + "\n")
        for child in tree.children_of(node):
            walk(child, level + 1)

    walk(tree.root, 0)
    return "".join(lines)


# -- verb handlers: each returns (exit_code, output_text) --------------


def _cmd_info(args) -> tuple[int, str]:
    s = NumericalSemigroup.from_generators(args.generators)
    if args.format == "json":
        return 0, _json_text(s.to_json_dict())
    return 0, _semigroup_text(s)


def _cmd_quotient(args) -> tuple[int, str]:
    s = NumericalSemigroup.from_generators(args.generators)
    return 0, _render_semigroup(s.quotient(args.divisor), args.format)


def _cmd_intersect(args) -> tuple[int, str]:
    result = NumericalSemigroup.from_generators(args.generators[0])
    for gens in args.generators[1:]:
        result = result.intersect(NumericalSemigroup.from_generators(gens))
    return 0, _render_semigroup(result, args.format)


def _cmd_fundamental_gaps(args) -> tuple[int, str]:
    s = NumericalSemigroup.from_generators(args.generators)
    fg = s.fundamental_gaps()
    if args.format == "json":
        return 0, _json_text(list(fg))
    return 0, ",".join(map(str, fg)) + "\n"


def _cmd_pm(args) -> tuple[int, str]:
    s = proportionally_modular(args.a, args.b, args.c)
    return 0, _render_semigroup(s, args.format)


def _cmd_extensions(args) -> tuple[int, str]:
    s = NumericalSemigroup.from_generators(args.generators)
    return 0, _render_family(arithmetic_extensions(s), args.format)


def _cmd_variety(args) -> tuple[int, str]:
    family = [NumericalSemigroup.from_generators(g) for g in args.generators]
    return 0, _render_family(smallest_variety(family), args.format)


def _cmd_is_extension(args) -> tuple[int, str]:
    s = NumericalSemigroup.from_generators(args.base)
    t = NumericalSemigroup.from_generators(args.candidate)
    return 0, ("true" if is_arithmetic_extension(s, t) else "false") + "\n"


def _cmd_hull(args) -> tuple[int, str]:
    family = [NumericalSemigroup.from_generators(g) for g in args.generators]
    variety = smallest_variety(family)
    return 0, _render_semigroup(monoid_hull(variety, args.elements), args.format)


def _cmd_upper_sets(args) -> tuple[int, str]:
    s = NumericalSemigroup.from_generators(args.generators)
    sets = upper_m_sets(s, args.modulus)
    if args.format == "json":
        return 0, _json_text([sorted(h) for h in sets])
    return 0, "".join("{" + ",".join(map(str, sorted(h))) + "}\n" for h in sets)


def _cmd_double(args) -> tuple[int, str]:
    s = NumericalSemigroup.from_generators(args.generators)
    t = build_double(s, args.modulus, args.upper_set)
    if args.format == "json":
        return 0, _json_text(
            {
                "m": args.modulus,
                "H": sorted(args.upper_set),
                "semigroup": t.to_json_dict(),
            }
        )
    return 0, _double_line(args.modulus, args.upper_set, t)


def _cmd_doubles(args) -> tuple[int, str]:
    s = NumericalSemigroup.from_generators(args.generators)
    results = doubles_bounded(s, args.frobenius_bound)
    if args.format == "json":
        return 0, _json_text(
            [
                {
                    "m": label.m,
                    "H": sorted(label.upper_set),
                    "semigroup": t.to_json_dict(),
                }
                for label, t in results
            ]
        )
    return 0, "".join(_double_line(l.m, l.upper_set, t) for l, t in results)


def _cmd_tree(args) -> tuple[int, str]:
    predicate = ALL_SEMIGROUPS if args.depth is None else depth_predicate(args.depth)
    tree = enumerate_tree(args.frobenius_bound, predicate)
    if args.format in ("dot", "json"):
        return 0, export_tree(tree, args.format)
    return 0, _tree_text(tree)


def _cmd_enumerate_all(args) -> tuple[int, str]:
    report = all_semigroups_up_to(args.frobenius_bound)
    if args.format == "json":
        return 0, _json_text(report.to_json_dict())
    return 0, "".join(str(s) + "\n" for s in report.semigroups)


def _cmd_oracle_check(args) -> tuple[int, str]:
    bound = args.frobenius_bound
    lines = []
    failures = 0

    reports = {f: all_semigroups_up_to(f) for f in range(1, bound + 1)}
    tree_ok = sum(
        1
        for f in range(1, bound + 1)
        if enumerate_tree(f, ALL_SEMIGROUPS).nodes == reports[f].semigroups
    )
    if tree_ok == bound:
        lines.append(f"ok tree-vs-bruteforce: {bound}/{bound} bounds agree\n")
    else:
        failures += 1
        lines.append(f"MISMATCH tree-vs-bruteforce: {tree_ok}/{bound} bounds agree\n")

    small = [s for s in reports[bound].semigroups if s.frobenius <= bound // 2]
    bad = [
        (s, f)
        for s in small
        for f in range(1, bound + 1)
        if [t for _, t in doubles_bounded(s, f)] != doubles_oracle(s, f)
    ]
    if not bad:
        lines.append(
            f"ok doubles-vs-bruteforce: {len(small)} semigroups x {bound} bounds agree\n"
        )
    else:
        failures += 1
        for s, f in bad:
            lines.append(f"MISMATCH doubles-vs-bruteforce: S={s} F={f}\n")

    ext_cap = min(bound, 8)
    candidates = [s for s in reports[bound].semigroups if s.frobenius <= ext_cap]
    bad_ext = [
        s
        for s in candidates
        if arithmetic_extensions(s).members != extension_oracle(s).members
    ]
    if not bad_ext:
        lines.append(
            f"ok extensions-vs-bruteforce: {len(candidates)} semigroups agree\n"
        )
    else:
        failures += 1
        for s in bad_ext:
            lines.append(f"MISMATCH extensions-vs-bruteforce: S={s}\n")

    lines.append("oracle-check: PASS\n" if not failures else "oracle-check: FAIL\n")
    return (1 if failures else 0), "".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numsem",
        description="Numerical semigroups: invariants, quotients, closed families, "
        "bounded doubles and depth-bounded tree enumeration.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name: str, handler: Callable, help_text: str, formats=("text", "json")):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--output", metavar="PATH", default=None)
        return p

    p = add("info", _cmd_info, "invariants of one semigroup")
    p.add_argument("generators", type=_generators)

    p = add("quotient", _cmd_quotient, "quotient by a positive integer")
    p.add_argument("generators", type=_generators)
    p.add_argument("divisor", type=_positive_int)

    p = add("intersect", _cmd_intersect, "intersection of two or more semigroups")
    p.add_argument("generators", type=_generators, nargs="+")

    p = add("fundamental-gaps", _cmd_fundamental_gaps, "gaps whose multiples are members")
    p.add_argument("generators", type=_generators)

    p = add("pm", _cmd_pm, "proportionally modular semigroup {x : a*x mod b <= c*x}")
    p.add_argument("a", type=_positive_int)
    p.add_argument("b", type=_positive_int)
    p.add_argument("c", type=_positive_int)

    p = add("extensions", _cmd_extensions, "smallest closed family containing one semigroup")
    p.add_argument("generators", type=_generators)

    p = add("variety", _cmd_variety, "smallest closed family containing several semigroups")
    p.add_argument("generators", type=_generators, nargs="+")

    p = add("is-extension", _cmd_is_extension, "is the second an arithmetic extension of the first?")
    p.add_argument("base", type=_generators)
    p.add_argument("candidate", type=_generators)

    p = add("hull", _cmd_hull, "smallest family member containing given elements")
    p.add_argument("generators", type=_generators, nargs="+")
    p.add_argument("--elements", type=_element_list, default=[])

    p = add("upper-sets", _cmd_upper_sets, "upper m-sets of a semigroup")
    p.add_argument("generators", type=_generators)
    p.add_argument("--modulus", type=_positive_int, required=True)

    p = add("double", _cmd_double, "build one double from its (m, H) label")
    p.add_argument("generators", type=_generators)
    p.add_argument("--modulus", type=_positive_int, required=True)
    p.add_argument("--upper-set", type=_element_list, default=[])

    p = add("doubles", _cmd_doubles, "all doubles under a Frobenius bound")
    p.add_argument("generators", type=_generators)
    p.add_argument("--frobenius-bound", type=_positive_int, required=True)

    p = add("tree", _cmd_tree, "tree of a family under a Frobenius bound",
            formats=("text", "json", "dot"))
    p.add_argument("--frobenius-bound", type=_positive_int, required=True)
    p.add_argument("--depth", type=_nonnegative_int, default=None)

    p = add("enumerate-all", _cmd_enumerate_all, "brute-force enumeration report")
    p.add_argument("--frobenius-bound", type=_positive_int, required=True)

    p = sub.add_parser("oracle-check", help="cross-validate algorithms against brute force")
    p.set_defaults(handler=_cmd_oracle_check)
    p.add_argument("--frobenius-bound", type=_positive_int, default=12)
    p.add_argument("--output", metavar="PATH", default=None)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, text = args.handler(args)
    except SemigroupError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.output is not None:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
