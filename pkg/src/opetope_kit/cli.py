"""Command-line front end.

Exit codes: 0 all checks passed, 1 an axiom or resource check failed,
2 the input could not be parsed, 3 an internal invariant broke (a bug,
not a user error).  Payload goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import AxiomReport, FaceComplex, Morphism, validate_morphism
from .dfc import face_tree, greatest_element, is_dfc
from .enumeration import (
    WORK_LIMIT_ENV,
    EnumerationBudget,
    enumerate_pops,
    enumerate_positive_opetopes,
)
from .errors import InternalInvariantBroken, OpetopeError, ParseError
from .io_formats import (
    emit_dot_hasse,
    emit_dot_tree,
    emit_dsl,
    emit_json,
    parse_dsl,
    parse_json,
)
from .paths import linear_order_s0, simple_zigzag, sources_partition
from .zpo import is_opetopic_cardinal, is_positive_opetope

PASS, FAIL, PARSE_FAIL, INTERNAL = 0, 1, 2, 3


def _sniff_format(path: str, override: str | None) -> str:
    if override:
        return override
    if path.endswith(".dsl"):
        return "dsl"
    if path.endswith(".json"):
        return "json"
    raise ParseError(
        f"cannot tell the format of {path!r}; pass --format dsl|json")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_document(path: str, fmt: str | None):
    text = _read(path)
    if path == "-" and not fmt:
        raise ParseError("reading from stdin requires --format")
    fmt = _sniff_format(path, fmt)
    return parse_dsl(text) if fmt == "dsl" else parse_json(text)


def _render_report(name: str, report: AxiomReport) -> list[str]:
    lines = [f"{name}: {report.verdict}"]
    for violation in report.violations:
        witnesses = ", ".join(violation.witnesses)
        suffix = f" [witnesses: {witnesses}]" if witnesses else ""
        lines.append(f"  {violation.axiom}: {violation.detail}{suffix}")
    return lines


def _emit_report(args, mode: str, checks: dict[str, AxiomReport],
                 agreement: bool | None) -> None:
    if getattr(args, "json", False):
        payload = {
            "mode": mode,
            "verdict": "pass" if all(r.passed for r in checks.values()) else "fail",
            "checks": {name: rep.to_dict() for name, rep in checks.items()},
            "agreement": agreement,
        }
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for name, report in checks.items():
            for line in _render_report(name, report):
                print(line)
        if agreement is not None:
            print("agreement: " + ("yes" if agreement else "NO"))


def cmd_validate(args) -> int:
    doc = _load_document(args.file, args.format)
    built = doc.build()
    if isinstance(built, AxiomReport):
        _emit_report(args, args.mode, {"base": built}, None)
        return FAIL
    complex_ = built
    if args.mode in ("pop", "phg"):
        _emit_report(args, args.mode, {args.mode: AxiomReport()}, None)
        return PASS
    if args.mode == "cardinal":
        report = is_opetopic_cardinal(complex_)
        _emit_report(args, args.mode, {"cardinal": report}, None)
        return PASS if report.passed else FAIL
    if args.mode == "opetope":
        report = is_positive_opetope(complex_)
        _emit_report(args, args.mode, {"opetope": report}, None)
        return PASS if report.passed else FAIL
    if args.mode == "dfc":
        report = is_dfc(complex_)
        _emit_report(args, args.mode, {"dfc": report}, None)
        return PASS if report.passed else FAIL
    dfc_report = is_dfc(complex_)
    opetope_report = is_positive_opetope(complex_)
    agreement = dfc_report.passed == opetope_report.passed
    _emit_report(args, "both",
                 {"dfc": dfc_report, "opetope": opetope_report}, agreement)
    if not agreement:
        print("the two characterizations disagree; repro dump follows",
              file=sys.stderr)
        print(emit_json(complex_), file=sys.stderr)
        return INTERNAL
    return PASS if dfc_report.passed else FAIL


def _require_complex(args) -> FaceComplex:
    doc = _load_document(args.file, args.format)
    built = doc.build()
    if isinstance(built, AxiomReport):
        for line in _render_report("base", built):
            print(line, file=sys.stderr)
        raise SystemExit(FAIL)
    return built


def _require_dfc(args) -> FaceComplex:
    complex_ = _require_complex(args)
    report = is_dfc(complex_)
    if not report.passed:
        for line in _render_report("dfc", report):
            print(line, file=sys.stderr)
        raise SystemExit(FAIL)
    return complex_


def cmd_convert(args) -> int:
    complex_ = _require_complex(args)
    if args.to == "dsl":
        sys.stdout.write(emit_dsl(complex_))
    else:
        print(emit_json(complex_))
    return PASS


def cmd_tree(args) -> int:
    complex_ = _require_dfc(args)
    if args.face not in complex_:
        print(f"unknown face {args.face!r}", file=sys.stderr)
        return FAIL
    if args.dot:
        sys.stdout.write(emit_dot_tree(complex_, args.face))
        return PASS
    tree = face_tree(complex_, args.face)

    def render(node: str, depth: int, slot: str | None) -> None:
        prefix = "  " * depth
        label = f"[{slot}] " if slot is not None else ""
        print(f"{prefix}{label}{node}")
        for child_slot, child in tree.children(node):
            render(child, depth + 1, child_slot)

    render(tree.root, 0, None)
    return PASS


def cmd_order(args) -> int:
    complex_ = _require_dfc(args)
    for face in linear_order_s0(complex_):
        print(face)
    return PASS


def cmd_partition(args) -> int:
    complex_ = _require_dfc(args)
    if not 0 <= args.dim < complex_.dimension:
        print(f"--dim must lie in [0, {complex_.dimension})", file=sys.stderr)
        return FAIL
    blocks = sources_partition(complex_, args.dim)
    for owner in sorted(blocks):
        print(f"{owner}: " + " ".join(sorted(blocks[owner])))
    omega = greatest_element(complex_)
    print("leftover: " + complex_.iterated_target(omega, args.dim))
    return PASS


def cmd_zigzag(args) -> int:
    complex_ = _require_dfc(args)
    for face in (args.anchor, args.from_, args.to):
        if face not in complex_:
            print(f"unknown face {face!r}", file=sys.stderr)
            return FAIL
    if args.from_ not in complex_.delta(args.anchor) or \
            args.to not in complex_.delta(args.anchor):
        print("--from and --to must be sources of the anchor", file=sys.stderr)
        return FAIL
    print(simple_zigzag(complex_, args.anchor, args.from_, args.to).render())
    return PASS


def cmd_enumerate(args) -> int:
    budget = EnumerationBudget(args.max_dim, args.max_faces)
    stream = (enumerate_positive_opetopes(budget) if args.opetopes_only
              else enumerate_pops(budget))
    if args.count_only:
        print(sum(1 for _ in stream))
        return PASS
    if args.emit_dir:
        os.makedirs(args.emit_dir, exist_ok=True)
        count = 0
        for i, complex_ in enumerate(stream):
            path = os.path.join(args.emit_dir, f"pop_{i:05d}.json")
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(emit_json(complex_) + "\n")
            count += 1
        print(f"wrote {count} complexes to {args.emit_dir}", file=sys.stderr)
        return PASS
    for complex_ in stream:
        print(emit_json(complex_))
    return PASS


def cmd_export_dot(args) -> int:
    complex_ = _require_complex(args)
    sys.stdout.write(emit_dot_hasse(complex_))
    return PASS


def cmd_morphism(args) -> int:
    source_doc = _load_document(args.from_, args.format)
    target_doc = _load_document(args.to, args.format)
    built_source = source_doc.build()
    built_target = target_doc.build()
    for name, built in (("source", built_source), ("target", built_target)):
        if isinstance(built, AxiomReport):
            for line in _render_report(f"base ({name})", built):
                print(line, file=sys.stderr)
            return FAIL
    mapping = {}
    for lineno, raw in enumerate(_read(args.map).splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=>" not in stripped:
            print(f"map line {lineno}: expected 'a => b'", file=sys.stderr)
            return PARSE_FAIL
        left, _, right = stripped.partition("=>")
        mapping[left.strip()] = right.strip()
    morphism = Morphism(built_source, built_target, mapping)
    try:
        report = validate_morphism(morphism)
    except OpetopeError as err:
        print(str(err), file=sys.stderr)
        return PARSE_FAIL
    if getattr(args, "json", False):
        print(json.dumps({"mode": "morphism", "verdict": report.verdict,
                          "checks": {"morphism": report.to_dict()},
                          "agreement": None}, sort_keys=True, indent=2))
    else:
        for line in _render_report("morphism", report):
            print(line)
    return PASS if report.passed else FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opetope-kit",
        description="Validate, convert, analyse and enumerate face complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("file", help="input file (.dsl or .json, '-' for stdin)")
        p.add_argument("--format", choices=("dsl", "json"),
                       help="override format sniffing")

    p = sub.add_parser("validate", help="run axiom checks")
    add_input(p)
    p.add_argument("--mode", default="both",
                   choices=("pop", "phg", "cardinal", "opetope", "dfc", "both"))
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("convert", help="re-emit in another format")
    add_input(p)
    p.add_argument("--to", required=True, choices=("dsl", "json"))
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("tree", help="show the source tree of a face")
    add_input(p)
    p.add_argument("--face", required=True)
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("order", help="print the 0-faces in ascending order")
    add_input(p)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("partition", help="sources partition at a dimension")
    add_input(p)
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("zigzag", help="the simple zig-zag between two sources")
    add_input(p)
    p.add_argument("--anchor", required=True)
    p.add_argument("--from", dest="from_", required=True)
    p.add_argument("--to", required=True)
    p.set_defaults(func=cmd_zigzag)

    p = sub.add_parser(
        "enumerate",
        help=f"enumerate complexes up to isomorphism "
             f"(work bounded by ${WORK_LIMIT_ENV})")
    p.add_argument("--max-dim", type=int, required=True)
    p.add_argument("--max-faces", type=int, required=True)
    p.add_argument("--opetopes-only", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--emit-dir")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("export-dot", help="covering relation as DOT")
    add_input(p)
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("morphism", help="validate a face mapping between files")
    p.add_argument("--from", dest="from_", required=True)
    p.add_argument("--to", required=True)
    p.add_argument("--map", required=True, help="file of lines 'a => b'")
    p.add_argument("--format", choices=("dsl", "json"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_morphism)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as err:
        if isinstance(err.code, int):
            return err.code
        raise
    except ParseError as err:
        print(str(err), file=sys.stderr)
        return PARSE_FAIL
    except InternalInvariantBroken as err:
        print(f"internal invariant broken: {err}", file=sys.stderr)
        return INTERNAL
    except OpetopeError as err:
        print(str(err), file=sys.stderr)
        return FAIL
    except OSError as err:
        print(str(err), file=sys.stderr)
        return PARSE_FAIL


if __name__ == "__main__":
    sys.exit(main())
