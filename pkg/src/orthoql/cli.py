"""Command-line front end: instance files, lattice operations, law runs.

Instance files are JSON: a coefficient field tag, an ambient dimension,
named subspaces given by spanning rows of scalar strings, named
orthogonal pairs referencing two subspace names, and named operators
referencing a domain name plus a square matrix.  Every load fully
validates the instances, so a file that parses is safe to compute with.

Reports are printed to stdout and are byte-identical for identical
inputs; wall-clock timing goes to stderr, which keeps stdout
diff-friendly.  Exit status: 0 when every law that should hold does
hold, 1 when a violation was found (a library bug, not a user error),
2 for unusable input.  Laws that are known to fail on Hilbert lattices
are tagged expected-fail and never affect the exit status.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from orthoql import laws
from orthoql.errors import NotCommuting, NotInDomain, OrthoQLError, ParseError
from orthoql.generators import (
    clql_triples,
    commuting_pairs,
    complql_triples,
    non_ordered_ortho_pairs,
    ordered_ortho_pairs,
    orthogonal_total_pair,
    random_ortho,
    random_partial_operator,
    random_scalar,
    rng_from,
)
from orthoql.linalg import Matrix, Vector
from orthoql.ortho import (
    OrthoSubspace,
    o_eq,
    o_implies,
    o_join,
    o_meet,
    o_minus,
    o_neg,
)
from orthoql.partial_op import (
    FAILS,
    PartialOperator,
    SKIPPED,
    check_order,
    commuting_calculus,
    cor7_calculus,
    decompose,
    op_eq,
    projection_of,
    subspaces_of,
)
from orthoql.quotient import QuotientSpace
from orthoql.scalars import Field, scalar_text
from orthoql.subspace import Subspace

__all__ = [
    "InstanceFile",
    "load_instances",
    "save_instances",
    "cmd_op",
    "cmd_check",
    "cmd_project",
    "cmd_roundtrip",
    "cmd_quotient",
    "main",
]


# --- instance files ----------------------------------------------------

@dataclass
class InstanceFile:
    field: Field
    ambient_dim: int
    subspaces: dict = dc_field(default_factory=dict)
    ortho: dict = dc_field(default_factory=dict)
    operators: dict = dc_field(default_factory=dict)


def _parse_rows(fld: Field, dim: int, rows, where: str) -> list:
    if not isinstance(rows, list):
        raise ParseError(f"{where}: expected a list of rows")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise ParseError(f"{where}: row {i} must list {dim} scalars")
        try:
            out.append([fld.parse(str(s)) for s in row])
        except ParseError as exc:
            raise ParseError(f"{where}: row {i}: {exc}") from None
    return out


def load_instances(path: str) -> InstanceFile:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise ParseError(f"{path}: top level must be an object")

    try:
        fld = Field(raw.get("field"))
    except ValueError:
        raise ParseError(f"{path}: field must be \"Q\" or \"Qi\"") from None
    dim = raw.get("ambient_dim")
    if not isinstance(dim, int) or dim < 0:
        raise ParseError(f"{path}: ambient_dim must be a nonnegative integer")

    inst = InstanceFile(fld, dim)
    for name, body in (raw.get("subspaces") or {}).items():
        rows = _parse_rows(fld, dim, body.get("basis", []), f"subspace {name!r}")
        inst.subspaces[name] = Subspace(fld, dim, rows)

    for name, body in (raw.get("ortho") or {}).items():
        parts = []
        for key in ("one", "zero"):
            ref = body.get(key)
            if ref not in inst.subspaces:
                raise ParseError(
                    f"ortho pair {name!r}: {key} references unknown subspace {ref!r}"
                )
            parts.append(inst.subspaces[ref])
        try:
            inst.ortho[name] = OrthoSubspace(parts[0], parts[1])
        except (ValueError, OrthoQLError) as exc:
            raise ParseError(f"ortho pair {name!r}: {exc}") from None

    for name, body in (raw.get("operators") or {}).items():
        ref = body.get("dom")
        if ref not in inst.subspaces:
            raise ParseError(
                f"operator {name!r}: dom references unknown subspace {ref!r}"
            )
        rows = _parse_rows(fld, dim, body.get("matrix", []), f"operator {name!r}")
        if len(rows) != dim:
            raise ParseError(f"operator {name!r}: matrix must have {dim} rows")
        try:
            inst.operators[name] = PartialOperator(
                inst.subspaces[ref], Matrix.from_rows(fld, rows)
            )
        except OrthoQLError as exc:
            raise ParseError(f"operator {name!r}: {exc}") from None
    return inst


def _basis_payload(sub: Subspace) -> list:
    return [[scalar_text(e) for e in row] for row in sub.basis.rows()]


def _fresh_name(taken: dict, base: str, sub: Subspace) -> str:
    name = base
    while name in taken and taken[name] != sub:
        name += "_"
    taken[name] = sub
    return name


def save_instances(inst: InstanceFile, path: str) -> None:
    """Write the canonical JSON form; loading it back reproduces every
    instance up to canonical equality."""
    subs = dict(inst.subspaces)
    ortho_payload = {}
    for name in sorted(inst.ortho):
        pair = inst.ortho[name]
        one = _fresh_name(subs, f"{name}.one", pair.one)
        zero = _fresh_name(subs, f"{name}.zero", pair.zero)
        ortho_payload[name] = {"one": one, "zero": zero}
    op_payload = {}
    for name in sorted(inst.operators):
        op = inst.operators[name]
        dom = _fresh_name(subs, f"{name}.dom", op.dom)
        op_payload[name] = {
            "dom": dom,
            "matrix": [[scalar_text(e) for e in row] for row in op.matrix.rows()],
        }
    payload = {
        "field": inst.field.value,
        "ambient_dim": inst.ambient_dim,
        "subspaces": {
            name: {"basis": _basis_payload(subs[name])} for name in sorted(subs)
        },
        "ortho": ortho_payload,
        "operators": op_payload,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _parse_vector(fld: Field, dim: int, text: str) -> Vector:
    t = text.strip()
    if t[:1] in "([" and t[-1:] in ")]":
        t = t[1:-1]
    parts = [p.strip() for p in t.split(",")] if t.strip() else []
    if len(parts) != dim:
        raise ParseError(f"vector {text!r}: expected {dim} comma-separated scalars")
    try:
        return Vector(fld, [fld.parse(p) for p in parts])
    except ParseError as exc:
        raise ParseError(f"vector {text!r}: {exc}") from None


def _vector_text(v: Vector) -> str:
    return "(" + ", ".join(scalar_text(e) for e in v) + ")"


# --- report rendering --------------------------------------------------

def _emit(payload: dict, lines: list, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def _law_payload(report: laws.LawReport) -> dict:
    out = {}
    for law in sorted(report.results):
        res = report.results[law]
        out[law] = {
            "expected_fail": res.expected_fail,
            "instances": res.instances,
            "hypothesis_met": res.hypothesis_met,
            "violations": [
                {"operands": v.operands, "witness": v.witness}
                for v in res.violations
            ],
        }
    return out


def _merge_clause_report(report: laws.LawReport, clause_report, operands: str):
    for clause in sorted(clause_report.clauses):
        outcome = clause_report.clauses[clause]
        report.result(clause).record(
            outcome.status != SKIPPED,
            outcome.status != FAILS,
            operands,
            outcome.detail if outcome.status == FAILS else "",
        )


# --- subcommands --------------------------------------------------------

_BINARY_OPS = ("meet", "join", "minus", "implies")
_UNARY_OPS = ("neg",)


def cmd_op(inst: InstanceFile, tokens: Sequence[str], fmt: str) -> int:
    if not tokens:
        raise ParseError("empty expression; expected e.g. 'meet A B'")
    for tok in tokens:
        if "(" in tok or ")" in tok:
            raise ParseError("expressions do not nest; name the intermediate result")
    op = tokens[0].lower()
    plain = op[1:] if op.startswith("o") and op[1:] in _BINARY_OPS + _UNARY_OPS else op
    if plain not in _BINARY_OPS + _UNARY_OPS:
        raise ParseError(f"unknown operation {tokens[0]!r}")
    names = tokens[1:]
    want = 1 if plain in _UNARY_OPS else 2
    if len(names) != want:
        raise ParseError(f"{plain} takes {want} operand name(s), got {len(names)}")

    kinds = []
    args = []
    for name in names:
        if name in inst.subspaces:
            kinds.append("subspace")
            args.append(inst.subspaces[name])
        elif name in inst.ortho:
            kinds.append("ortho")
            args.append(inst.ortho[name])
        else:
            raise ParseError(f"unknown instance {name!r}")
    if len(set(kinds)) > 1:
        raise ParseError("cannot mix subspaces and orthogonal pairs in one expression")

    if kinds[0] == "subspace":
        table = {
            "meet": lambda a, b: a.meet(b),
            "join": lambda a, b: a.join(b),
            "minus": lambda a, b: a.meet(b.perp()),
            "implies": lambda a, b: a.perp().join(b),
            "neg": lambda a: a.perp(),
        }
        result = table[plain](*args)
        payload = {"command": ["op", *tokens], "result": {"basis": _basis_payload(result)}}
        lines = [f"op {' '.join(tokens)}", "basis:"]
        lines += [f"  {_vector_text(r)}" for r in result.basis.rows()] or ["  (empty)"]
    else:
        table = {
            "meet": o_meet,
            "join": o_join,
            "minus": o_minus,
            "implies": o_implies,
            "neg": o_neg,
        }
        result = table[plain](*args)
        payload = {
            "command": ["op", *tokens],
            "result": {
                "one": _basis_payload(result.one),
                "zero": _basis_payload(result.zero),
            },
        }
        lines = [f"op {' '.join(tokens)}", "one:"]
        lines += [f"  {_vector_text(r)}" for r in result.one.basis.rows()] or ["  (empty)"]
        lines.append("zero:")
        lines += [f"  {_vector_text(r)}" for r in result.zero.basis.rows()] or ["  (empty)"]
    _emit(payload, lines, fmt)
    return 0


_SELECTORS = (
    "clql",
    "complql",
    "order",
    "comm",
    "pls",
    "distributivity",
    "modularity",
    "heyting",
    "all",
)


def _windows(items: list, size: int) -> list:
    n = len(items)
    if n == 0:
        return []
    return [tuple(items[(i + j) % n] for j in range(size)) for i in range(n)]


def _named_sorted(mapping: dict) -> list:
    return [mapping[name] for name in sorted(mapping)]


def _check_suite(
    selector: str,
    inst: Optional[InstanceFile],
    random_spec: Optional[tuple],
    fld: Field,
) -> laws.LawReport:
    report = laws.LawReport()
    if random_spec is not None:
        dim, count, seed = random_spec
    else:
        dim, count, seed = None, 0, 0

    if selector == "clql":
        if inst is not None:
            triples = _windows(_named_sorted(inst.subspaces), 3)
        else:
            triples = clql_triples(rng_from(seed), fld, dim, count)
        return report.merge(laws.check_clql(triples))

    if selector == "complql":
        if inst is not None:
            triples = _windows(_named_sorted(inst.ortho), 3)
        else:
            triples = complql_triples(rng_from(seed), fld, dim, count)
        return report.merge(laws.check_complql(triples))

    if selector == "order":
        if inst is not None:
            pairs = _windows(_named_sorted(inst.ortho), 2)
        else:
            rng = rng_from(seed)
            pairs = ordered_ortho_pairs(rng, fld, dim, count // 2)
            pairs += non_ordered_ortho_pairs(rng, fld, dim, count - count // 2)
        for i, (l, m) in enumerate(pairs):
            _merge_clause_report(report, check_order(l, m), f"pair #{i}")
        return report

    if selector == "comm":
        if inst is not None:
            pairs = _windows(_named_sorted(inst.ortho), 2)
            proj_pairs = [(projection_of(l), projection_of(m)) for l, m in pairs]
            cor7_pairs = pairs
        else:
            rng = rng_from(seed)
            proj_pairs = commuting_pairs(rng, fld, dim, count)
            cor7_pairs = [orthogonal_total_pair(rng, fld, dim) for _ in range(count)]
        for i, (p, q) in enumerate(proj_pairs):
            try:
                _merge_clause_report(report, commuting_calculus(p, q), f"pair #{i}")
            except NotCommuting:
                for clause in ("comm1_i", "comm1_ii", "comm1_iii", "comm1_iv"):
                    report.result(clause).record(False, True, f"pair #{i}")
        for i, (l, m) in enumerate(cor7_pairs):
            _merge_clause_report(report, cor7_calculus(l, m), f"pair #{i}")
        return report

    if selector == "pls":
        if inst is not None:
            ops = _named_sorted(inst.operators)
            ks = [inst.field.coerce(c) for c in (1, 0, -1, 2)]
        else:
            rng = rng_from(seed)
            ops = [
                random_partial_operator(rng, fld, dim, total=(i % 3 == 0))
                for i in range(count)
            ]
            ks = [random_scalar(rng, fld) for _ in range(max(count, 1))]
        return report.merge(laws.check_pls(ops, ks))

    law_id = "heyting_adjunction" if selector == "heyting" else selector
    search_dim = dim if dim is not None else (inst.ambient_dim if inst else 2)
    found = laws.find_counterexample(law_id, max(search_dim, 2), fld)
    res = report.result(law_id, expected_fail=True)
    if found is None:
        res.record(True, True, "no violating instance found")
    else:
        binds = ", ".join(f"{k}={v!r}" for k, v in found.operands.items())
        res.record(True, False, binds, f"lhs={found.lhs!r} rhs={found.rhs!r}")
    return report


def cmd_check(
    inst: Optional[InstanceFile],
    random_spec: Optional[tuple],
    selector: str,
    fmt: str,
    fld: Field,
) -> int:
    if selector not in _SELECTORS:
        raise ParseError(
            f"unknown law selector {selector!r}; expected one of {', '.join(_SELECTORS)}"
        )
    selectors = (
        ("clql", "complql", "order", "comm", "pls", "distributivity", "modularity", "heyting")
        if selector == "all"
        else (selector,)
    )
    report = laws.LawReport()
    for sel in selectors:
        report.merge(_check_suite(sel, inst, random_spec, fld))

    payload = {
        "command": ["check", selector],
        "laws": _law_payload(report),
        "ok": report.ok,
        "unexpected_violations": report.unexpected_violations,
    }
    lines = [report.results[law].line() for law in sorted(report.results)]
    lines.append(
        f"result: {'ok' if report.ok else 'VIOLATIONS'} "
        f"(unexpected violations: {report.unexpected_violations})"
    )
    _emit(payload, lines, fmt)
    return 0 if report.ok else 1


def cmd_project(inst: InstanceFile, name: str, vector_text: str, fmt: str) -> int:
    if name not in inst.ortho:
        raise ParseError(f"unknown orthogonal pair {name!r}")
    pair = inst.ortho[name]
    x = _parse_vector(inst.field, inst.ambient_dim, vector_text)
    try:
        l1, l0 = decompose(pair, x)
    except NotInDomain:
        payload = {"command": ["project", name], "x": _vector_text(x), "result": "NotInDomain"}
        _emit(payload, [f"project {name} {_vector_text(x)}", "NotInDomain"], fmt)
        return 0
    payload = {
        "command": ["project", name],
        "x": _vector_text(x),
        "one_part": _vector_text(l1),
        "zero_part": _vector_text(l0),
    }
    lines = [
        f"project {name} {_vector_text(x)}",
        f"one_part:  {_vector_text(l1)}",
        f"zero_part: {_vector_text(l0)}",
    ]
    _emit(payload, lines, fmt)
    return 0


def cmd_roundtrip(
    inst: Optional[InstanceFile], random_spec: Optional[tuple], fmt: str, fld: Field
) -> int:
    if inst is not None:
        pairs = [(name, inst.ortho[name]) for name in sorted(inst.ortho)]
    else:
        dim, count, seed = random_spec
        rng = rng_from(seed)
        pairs = [(f"#{i}", random_ortho(rng, fld, dim)) for i in range(count)]
    verdicts = {}
    bad = 0
    for name, pair in pairs:
        p = projection_of(pair)
        back = subspaces_of(p)
        again = projection_of(back)
        good = o_eq(back, pair) and op_eq(again, p)
        verdicts[name] = "equal" if good else "MISMATCH"
        bad += 0 if good else 1
    payload = {"command": ["roundtrip"], "verdicts": verdicts, "mismatches": bad}
    lines = [f"{name}: {verdicts[name]}" for name, _ in pairs]
    lines.append(f"result: {'ok' if bad == 0 else 'MISMATCHES'} ({len(pairs)} instances)")
    _emit(payload, lines, fmt)
    return 0 if bad == 0 else 1


def cmd_quotient(
    inst: InstanceFile, name: str, x_text: str, y_text: str, fmt: str
) -> int:
    if name not in inst.ortho:
        raise ParseError(f"unknown orthogonal pair {name!r}")
    pair = inst.ortho[name]
    x = _parse_vector(inst.field, inst.ambient_dim, x_text)
    y = _parse_vector(inst.field, inst.ambient_dim, y_text)
    q = QuotientSpace(pair)
    try:
        equal = q.q_eq(x, y)
        inner_val = q.q_inner(x, y)
    except NotInDomain as exc:
        payload = {"command": ["quotient", name], "result": "NotInDomain", "detail": str(exc)}
        _emit(payload, [f"quotient {name}", f"NotInDomain: {exc}"], fmt)
        return 0
    payload = {
        "command": ["quotient", name],
        "x": _vector_text(x),
        "y": _vector_text(y),
        "equal": equal,
        "inner": scalar_text(inner_val),
    }
    lines = [
        f"quotient {name} {_vector_text(x)} {_vector_text(y)}",
        f"equal: {str(equal).lower()}",
        f"inner: {scalar_text(inner_val)}",
    ]
    _emit(payload, lines, fmt)
    return 0


# --- argument wiring -----------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthoql",
        description="exact lattice and partial-projection calculator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, random_ok=False):
        p.add_argument("--file", help="instance file (JSON)")
        if random_ok:
            p.add_argument(
                "--random",
                nargs=3,
                type=int,
                metavar=("DIM", "COUNT", "SEED"),
                help="generate instances over Q instead of reading a file",
            )
        p.add_argument(
            "--format", choices=("text", "json"), default="text", dest="fmt"
        )

    p_op = sub.add_parser("op", help="apply one lattice operation to named instances")
    add_common(p_op)
    p_op.add_argument("expr", nargs="+", help="operation followed by operand names")

    p_check = sub.add_parser("check", help="run law suites and report verdicts")
    add_common(p_check, random_ok=True)
    p_check.add_argument("--laws", default="all", help=f"one of {', '.join(_SELECTORS)}")

    p_project = sub.add_parser("project", help="split a vector along an orthogonal pair")
    add_common(p_project)
    p_project.add_argument("ortho", help="name of the orthogonal pair")
    p_project.add_argument("vector", help="vector like (2,3,0)")

    p_round = sub.add_parser(
        "roundtrip", help="verify the pair/projection correspondence on instances"
    )
    add_common(p_round, random_ok=True)

    p_quot = sub.add_parser("quotient", help="compare two vectors in a quotient")
    add_common(p_quot)
    p_quot.add_argument("ortho", help="name of the orthogonal pair")
    p_quot.add_argument("x", help="first vector")
    p_quot.add_argument("y", help="second vector")
    return parser


def _load_if_needed(args, random_ok: bool) -> Optional[InstanceFile]:
    has_random = random_ok and args.random is not None
    if args.file and has_random:
        raise ParseError("choose one of --file or --random, not both")
    if args.file:
        return load_instances(args.file)
    if not has_random:
        raise ParseError("an instance file is required (or --random where supported)")
    dim, count, seed = args.random
    if dim < 0 or count < 0:
        raise ParseError("--random needs a nonnegative dimension and count")
    return None


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        if args.command == "op":
            inst = _load_if_needed(args, random_ok=False)
            code = cmd_op(inst, args.expr, args.fmt)
        elif args.command == "check":
            inst = _load_if_needed(args, random_ok=True)
            fld = inst.field if inst is not None else Field.Q
            spec = None if inst is not None else tuple(args.random)
            code = cmd_check(inst, spec, args.laws, args.fmt, fld)
        elif args.command == "project":
            inst = _load_if_needed(args, random_ok=False)
            code = cmd_project(inst, args.ortho, args.vector, args.fmt)
        elif args.command == "roundtrip":
            inst = _load_if_needed(args, random_ok=True)
            fld = inst.field if inst is not None else Field.Q
            spec = None if inst is not None else tuple(args.random)
            code = cmd_roundtrip(inst, spec, args.fmt, fld)
        else:
            inst = _load_if_needed(args, random_ok=False)
            code = cmd_quotient(inst, args.ortho, args.x, args.y, args.fmt)
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OrthoQLError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    sys.stderr.write(f"elapsed: {time.monotonic() - started:.3f}s\n")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
