"""Command-line interface: root data, table emission, identity audits, isomorphisms.

Exit codes: 0 all requested checks passed (or emission succeeded), 1 at least
one check failed, 2 usage error. Failure instances go to stderr; artifacts go
to stdout or --out.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import functools
import io
import json
import sys
from pathlib import Path

from .algebra import Element, GeneratorLabel, LieAlgebra, lower_label, raise_label
from .audits import (
    AuditReport,
    audit_chain_products,
    audit_killing,
    audit_cyclic_rule,
    audit_negation_rule,
    check_antisymmetry,
    check_grading,
    check_jacobi,
    check_serre,
)
from .cyclic import cyclic_table
from .goldens import reference_cyclic_table, reference_hermitian_table
from .hermitian import UnsupportedAlgebraError, hermitian_table
from .isomorphism import (
    REFERENCE_MAP_NAME,
    REFERENCE_PINS,
    UNIT_PINS,
    DiagonalMap,
    NoMapError,
    named_map,
    solve_diagonal_map,
    verify_homomorphism,
)
from .roots import CartanMatrix, InvalidCartanError, NotFiniteTypeError, RootSystem, generate_root_system

CHECK_TOKENS = ("antisym", "jacobi", "serre", "prop28", "prop29", "prop211", "killing", "fixture")
FORMATS = ("markdown", "json", "csv")
APPROACHES = ("hermitian", "cyclic")


class UsageError(ValueError):
    """Bad flag values detected after argument parsing."""


def _root_system(source: str) -> RootSystem:
    return generate_root_system(CartanMatrix.from_spec(source))


@functools.lru_cache(maxsize=None)
def _cached_table(entries, approach: str) -> LieAlgebra:
    rs = generate_root_system(CartanMatrix(entries))
    return hermitian_table(rs) if approach == "hermitian" else cyclic_table(rs)


def _build_table(rs: RootSystem, approach: str) -> LieAlgebra:
    # rebuilt from first principles; memoized only within a single process
    return _cached_table(rs.cartan.entries, approach)


def _reference_table(rs: RootSystem, approach: str) -> LieAlgebra:
    return reference_hermitian_table(rs) if approach == "hermitian" else reference_cyclic_table(rs)


# -- rendering -------------------------------------------------------------


def _csv_text(rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="\n").writerows(rows)
    return buffer.getvalue()


def _coeff_markdown(coeff, label_text: str) -> str:
    text = str(coeff)
    if text == "1":
        return label_text
    if text == "-1":
        return f"-{label_text}"
    if text.lstrip("-").isdigit():
        return f"{text}{label_text}"
    return f"({text}){label_text}"


def render_element(alg: LieAlgebra, element: Element) -> str:
    if element.is_zero():
        return "0"
    for gamma in alg.root_system.positive_roots:
        if element == alg.cartan_element(gamma):
            return alg.style.label_text(GeneratorLabel("H", gamma))
    parts = [_coeff_markdown(coeff, alg.style.label_text(label)) for label, coeff in element.items()]
    out = parts[0]
    for part in parts[1:]:
        out += " - " + part[1:] if part.startswith("-") else " + " + part
    return out


def emit_table(alg: LieAlgebra, fmt: str) -> str:
    """Render the bracket table; markdown mirrors the triangular tabulated layout."""
    if fmt == "json":
        return json.dumps(alg.to_json_dict(), indent=2) + "\n"
    if fmt == "csv":
        rows = [["x", "y", "label", "a", "b", "c", "d"]]
        for x, y, value in alg.table_entries():
            for label, coeff in value.items():
                record = coeff.to_record()
                rows.append(
                    [x.serialize(), y.serialize(), label.serialize(),
                     record["a"], record["b"], record["c"], record["d"]]
                )
        return _csv_text(rows)

    positives = alg.root_system.positive_roots
    columns = [raise_label(r) for r in positives] + [lower_label(r) for r in positives]
    header = [""] + [alg.style.label_text(c) for c in columns]
    rows = [header, ["---"] * len(header)]
    for gamma in positives:
        h = alg.cartan_element(gamma)
        cells = [render_element(alg, alg.bracket(h, col)) for col in columns]
        rows.append([alg.style.label_text(GeneratorLabel("H", gamma))] + cells)
    for i, row_label in enumerate(columns):
        cells = []
        for j, col in enumerate(columns):
            cells.append("" if j < i else render_element(alg, alg.bracket(row_label, col)))
        rows.append([alg.style.label_text(row_label)] + cells)
    return "\n".join("| " + " | ".join(row) + " |" for row in rows) + "\n"


def emit_report(report: AuditReport, fmt: str) -> str:
    if fmt == "json":
        payload = {
            "checks": [dataclasses.asdict(check) for check in report.checks],
            "summary": {"pass": report.pass_count, "fail": report.fail_count},
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        rows = [["identity", "instance", "left", "right", "passed"]]
        for check in report.checks:
            rows.append([check.identity, check.instance, check.left, check.right, str(check.passed)])
        return _csv_text(rows)
    lines = ["| identity | instance | left | right | pass |", "| --- | --- | --- | --- | --- |"]
    for check in report.checks:
        mark = "pass" if check.passed else "FAIL"
        lines.append(f"| {check.identity} | {check.instance} | {check.left} | {check.right} | {mark} |")
    lines.append("")
    lines.append(f"summary: {report.summary()}")
    return "\n".join(lines) + "\n"


def emit_roots(rs: RootSystem, fmt: str) -> str:
    roots = rs.positive_roots
    if fmt == "json":
        payload = {
            "cartan": [list(row) for row in rs.cartan.entries],
            "positive_roots": [r.serialize() for r in roots],
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        return _csv_text([["index", "m1", "m2"]] + [[str(i + 1), str(r.m1), str(r.m2)] for i, r in enumerate(roots)])
    lines = [f"positive roots ({len(roots)}):"]
    lines += [f"  {i + 1}. {r.display()} = {r.serialize()}" for i, r in enumerate(roots)]
    return "\n".join(lines) + "\n"


def emit_map(dmap: DiagonalMap, report: AuditReport, fmt: str) -> str:
    if fmt == "json":
        payload = {
            "factors": dmap.to_json_dict(),
            "verification": {"pass": report.pass_count, "fail": report.fail_count},
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        rows = [["label", "a", "b", "c", "d"]]
        for label, record in dmap.to_json_dict().items():
            rows.append([label, record["a"], record["b"], record["c"], record["d"]])
        return _csv_text(rows)
    lines = ["| generator | factor |", "| --- | --- |"]
    for label in sorted(dmap.factors, key=lambda l: l.sort_key()):
        lines.append(f"| {label.serialize()} | {dmap.factors[label]} |")
    lines.append("")
    lines.append(f"homomorphism checks: {report.summary()}")
    return "\n".join(lines) + "\n"


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# -- commands -------------------------------------------------------------


def _cmd_roots(args) -> int:
    rs = _root_system(args.cartan)
    _write(emit_roots(rs, args.format), args.out)
    return 0


def _cmd_table(args) -> int:
    rs = _root_system(args.cartan)
    algebra = _build_table(rs, args.approach)
    _write(emit_table(algebra, args.format), args.out)
    return 0


def _run_check(token: str, alg: LieAlgebra, reference: LieAlgebra) -> AuditReport:
    if token == "antisym":
        return check_antisymmetry(alg)
    if token == "jacobi":
        return check_grading(alg).merged_with(check_jacobi(alg))
    if token == "serre":
        return check_serre(alg)
    if token == "prop28":
        return audit_negation_rule(alg)
    if token == "prop29":
        return audit_cyclic_rule(alg)
    if token == "prop211":
        return audit_chain_products(alg)
    if token == "killing":
        return audit_killing(alg)
    if token == "fixture":
        from .audits import AuditCheck

        checks = []
        for x, y, mine, theirs in alg.table_differences(reference):
            checks.append(AuditCheck("fixture", f"({x}, {y})", str(mine), str(theirs), False))
        if not checks:
            checks.append(AuditCheck("fixture", "all 91 pairs", "constructed table", "reference table", True))
        return AuditReport(checks)
    raise UsageError(f"unknown check {token!r}")


def _cmd_verify(args) -> int:
    tokens = [t.strip() for t in args.checks.split(",")] if args.checks else list(CHECK_TOKENS)
    for token in tokens:
        if token not in CHECK_TOKENS:
            raise UsageError(f"unknown check {token!r}; choose from {', '.join(CHECK_TOKENS)}")
    rs = _root_system(args.cartan)
    algebra = _build_table(rs, args.approach)
    reference = _reference_table(rs, args.approach) if "fixture" in tokens else None
    combined = AuditReport([])
    for token in tokens:
        combined = combined.merged_with(_run_check(token, algebra, reference))
    _write(emit_report(combined, args.format), args.out)
    for failure in combined.failures():
        print(f"FAIL [{failure.identity}] {failure.instance}: {failure.left} != {failure.right}", file=sys.stderr)
    print(f"verify[{args.approach}]: {combined.summary()}", file=sys.stderr)
    return 0 if combined.passed else 1


def _cmd_iso(args) -> int:
    rs = _root_system(args.cartan)
    source = _build_table(rs, args.source)
    target = _build_table(rs, args.to)
    if args.solve:
        pins = REFERENCE_PINS if (args.source, args.to) == ("cyclic", "hermitian") else UNIT_PINS
        dmap = solve_diagonal_map(source, target, pins)
    elif args.map == REFERENCE_MAP_NAME:
        dmap = named_map(args.map, source)
    else:
        data = json.loads(Path(args.map).read_text(encoding="utf-8"))
        dmap = DiagonalMap.from_json_dict(data.get("factors", data))
    report = verify_homomorphism(source, target, dmap)
    _write(emit_map(dmap, report, args.format), args.out)
    for failure in report.failures():
        print(f"FAIL [iso] {failure.instance}: {failure.left} != {failure.right}", file=sys.stderr)
    print(f"iso[{args.source} -> {args.to}]: {report.summary()}", file=sys.stderr)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g2weyl",
        description="Exact g2 commutation tables, structure-constant audits, and basis isomorphisms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, approach_required: bool = False):
        p.add_argument("--cartan", default="g2", help="preset name (g2, a2, b2, a1a1) or JSON 2x2 matrix")
        p.add_argument("--format", choices=FORMATS, default="markdown")
        p.add_argument("--out", default=None, help="write the artifact to a file instead of stdout")
        if approach_required:
            p.add_argument("--approach", choices=APPROACHES, required=True)

    p_roots = sub.add_parser("roots", help="positive roots of a rank-2 Cartan matrix")
    add_common(p_roots)
    p_roots.set_defaults(func=_cmd_roots)

    p_table = sub.add_parser("table", help="emit a full commutation table")
    add_common(p_table, approach_required=True)
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="run identity audits against a constructed table")
    add_common(p_verify, approach_required=True)
    p_verify.add_argument(
        "--checks",
        default=None,
        help=f"comma list from {{{','.join(CHECK_TOKENS)}}}; defaults to all "
        "(jacobi includes the weight-grading sweep)",
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_iso = sub.add_parser("iso", help="solve or verify a diagonal map between the two tables")
    p_iso.add_argument("--cartan", default="g2")
    p_iso.add_argument("--from", dest="source", choices=APPROACHES, required=True)
    p_iso.add_argument("--to", choices=APPROACHES, required=True)
    group = p_iso.add_mutually_exclusive_group(required=True)
    group.add_argument("--solve", action="store_true", help="recover the diagonal map from the two tables")
    group.add_argument("--map", default=None, help=f"a map JSON file or the built-in name {REFERENCE_MAP_NAME!r}")
    p_iso.add_argument("--format", choices=FORMATS, default="json")
    p_iso.add_argument("--out", default=None)
    p_iso.set_defaults(func=_cmd_iso)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidCartanError, NotFiniteTypeError, UnsupportedAlgebraError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NoMapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
