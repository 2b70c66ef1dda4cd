"""Command-line front end: ``quatrep rep|generators|enumerate|verify|rotate``.

Exit codes: 0 success, 1 a verification or count check failed, 2 usage,
parse or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from quatrep import autos
from quatrep.enumeration import ENUMERATIONS, EnumerationReport, GeneratorLabel, HamiltonTriple, identify
from quatrep.errors import DomainError, ParseError, PreconditionError
from quatrep.mat4 import Mat4
from quatrep.quaternion import Quaternion, format_rational
from quatrep.reps import Side, rep
from quatrep.verify import SUITES, VerificationVerdict, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ rendering

def _json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _flat(m: Mat4) -> list[str]:
    return [format_rational(x) for x in m.entries()]


def _indent(text: str, pad: str = "  ") -> str:
    return "\n".join(pad + line for line in text.splitlines())


def _label_or_miss(m: Mat4) -> str:
    label = identify(m)
    return str(label) if label else "not a signed generator"


def render_matrix(m: Mat4, fmt: str, meta: dict[str, Any]) -> str:
    if fmt == "json":
        return _json({**meta, "matrix": m.to_json()})
    if fmt == "csv":
        return _csv(["c0", "c1", "c2", "c3"], [[format_rational(x) for x in row] for row in m.rows])
    return m.to_text() + "\n"


def render_generators(fmt: str) -> str:
    gens = [GeneratorLabel(side, unit, 1) for side in (Side.LEFT, Side.RIGHT) for unit in "hjk"]
    if fmt == "json":
        return _json({"generators": [{"label": str(g), "matrix": g.matrix().to_json()} for g in gens]})
    if fmt == "csv":
        return _csv(["label"] + [f"m{i}{j}" for i in range(4) for j in range(4)],
                    [[str(g)] + _flat(g.matrix()) for g in gens])
    return "\n\n".join(f"{g}:\n{_indent(g.matrix().to_text())}" for g in gens) + "\n"


def _triple_labels(t: HamiltonTriple) -> list[str]:
    if t.labels:
        return [str(lab) for lab in t.labels]
    return [_label_or_miss(m) for m in t.matrices]


def render_report(report: EnumerationReport, fmt: str) -> str:
    is_triples = report.target in ("systems", "triplets")
    if fmt == "json":
        if is_triples:
            items = [{"index": i, **s.to_json()} for i, s in enumerate(report.survivors)]
        else:
            items = [
                {"index": i, "label": str(lab) if lab else None, "matrix": m.to_json()}
                for i, (m, lab) in enumerate(zip(report.survivors, report.classification))
            ]
        return _json({
            "target": report.target,
            "candidates_examined": report.candidates_examined,
            "count": report.count,
            "expected_count": report.expected_count,
            "matches_expected": report.matches_expected,
            "survivors": items,
        })
    if fmt == "csv":
        if is_triples:
            return _csv(["index", "first", "second", "third"],
                        [[i, *_triple_labels(s)] for i, s in enumerate(report.survivors)])
        return _csv(["index", "label"] + [f"m{i}{j}" for i in range(4) for j in range(4)],
                    [[i, str(lab) if lab else "", *_flat(m)]
                     for i, (m, lab) in enumerate(zip(report.survivors, report.classification))])
    lines = [
        f"target: {report.target}",
        f"candidates examined: {report.candidates_examined}",
        f"survivors: {report.count} (expected {report.expected_count})"
        f" {'OK' if report.matches_expected else 'MISMATCH'}",
    ]
    if report.target == "triplets":
        lines.append("")
        lines.extend(f"{i:3d}  " + "  ".join(f"{x:>4}" for x in _triple_labels(s))
                     for i, s in enumerate(report.survivors))
    elif report.target == "systems":
        for i, s in enumerate(report.survivors):
            side = s.side()
            lines.append(f"\nsystem {i + 1} ({side.value if side else 'mixed'} action): "
                         + ", ".join(_triple_labels(s)))
            for name, m in zip("HJK", s.matrices):
                lines.append(f"  {name}{i + 1} = {_label_or_miss(m)}")
                lines.append(_indent(m.to_text(), "    "))
    else:
        for i, (m, lab) in enumerate(zip(report.survivors, report.classification)):
            lines.append(f"\n[{i}] {lab if lab else 'not a signed generator'}")
            lines.append(_indent(m.to_text()))
    return "\n".join(lines) + "\n"


def render_verdicts(verdicts: list[VerificationVerdict], fmt: str, meta: dict[str, Any]) -> str:
    passed = all(v.passed for v in verdicts)
    if fmt == "json":
        return _json({**meta, "passed": passed, "verdicts": [v.to_json() for v in verdicts]})
    if fmt == "csv":
        return _csv(["check", "passed", "detail"], [[v.check_name, str(v.passed).lower(), v.detail] for v in verdicts])
    width = max(len(v.check_name) for v in verdicts)
    lines = [f"{'PASS' if v.passed else 'FAIL'}  {v.check_name.ljust(width)}  {v.detail}" for v in verdicts]
    lines.append(f"{sum(v.passed for v in verdicts)}/{len(verdicts)} checks passed")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ commands

def _parse_quaternion(text: str, flag: str) -> Quaternion:
    try:
        return Quaternion.parse(text)
    except ParseError as exc:
        raise UsageError(f"{flag}: {exc}") from exc


def cmd_rep(args: argparse.Namespace) -> tuple[str, int]:
    q = _parse_quaternion(args.q, "--q")
    side = Side(args.side)
    m = rep(side, q)
    return render_matrix(m, args.format, {"side": side.value, "q": q.to_json()}), EXIT_OK


def cmd_generators(args: argparse.Namespace) -> tuple[str, int]:
    return render_generators(args.format), EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> tuple[str, int]:
    report = ENUMERATIONS[args.target]()
    return render_report(report, args.format), EXIT_OK if report.matches_expected else EXIT_FAIL


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    verdicts = run_suite(args.suite, seed=args.seed, samples=args.samples)
    meta = {"suite": args.suite, "seed": args.seed, "samples": args.samples}
    ok = all(v.passed for v in verdicts)
    return render_verdicts(verdicts, args.format, meta), EXIT_OK if ok else EXIT_FAIL


def _load_system(args: argparse.Namespace) -> tuple[str, HamiltonTriple]:
    if args.matrices is not None:
        raw = args.matrices
        if not raw.lstrip().startswith("["):
            try:
                raw = Path(raw).read_text()
            except OSError as exc:
                raise UsageError(f"--matrices: cannot read {args.matrices!r}: {exc}") from exc
        try:
            data = json.loads(raw)
            if not isinstance(data, list) or len(data) != 3:
                raise ParseError("expected a JSON array of 3 matrices", raw, 0)
            mats = [Mat4.from_json(m) for m in data]
            return "custom", HamiltonTriple.labelled(*mats)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--matrices: invalid JSON: {exc}") from exc
        except (ParseError, TypeError, ValueError) as exc:
            raise UsageError(f"--matrices: {exc}") from exc
    systems = ENUMERATIONS["systems"]().survivors
    side = Side(args.system)
    return side.value, next(s for s in systems if s.side() is side)


def cmd_rotate(args: argparse.Namespace) -> tuple[str, int]:
    u = _parse_quaternion(args.u, "--u")
    if u.is_zero():
        raise DomainError("--u must be a nonzero quaternion")
    name, system = _load_system(args)
    units = autos.rotated_units(u)
    U = autos.conjugation_matrix(u)
    try:
        moved = autos.transform_system(u, system)
        verdict = VerificationVerdict(
            "rotate.hamiltonian", True, "U M U^T satisfies H^2 = J^2 = K^2 = HJK = -I"
        )
    except PreconditionError as exc:
        moved = None
        verdict = VerificationVerdict("rotate.hamiltonian", False, str(exc))
    units_ok = units.relations_hold()
    code = EXIT_OK if verdict.passed and units_ok else EXIT_FAIL

    if args.format == "json":
        payload = {
            "u": u.to_json(),
            "rotated_units": {"h_u": units.h_u.to_json(), "j_u": units.j_u.to_json(), "k_u": units.k_u.to_json()},
            "rotated_units_hamiltonian": units_ok,
            "matrix": U.to_json(),
            "system": {
                "name": name,
                "input": system.to_json(),
                "output": _triple_json(moved) if moved else None,
            },
            "verdict": verdict.to_json(),
        }
        return _json(payload), code
    if args.format == "csv":
        rows = [
            ["u", "u", " ".join(u.to_json())],
            ["unit", "h_u", " ".join(units.h_u.to_json())],
            ["unit", "j_u", " ".join(units.j_u.to_json())],
            ["unit", "k_u", " ".join(units.k_u.to_json())],
            ["matrix", "U", " ".join(_flat(U))],
        ]
        if moved:
            for slot, m in zip(("first", "second", "third"), moved.matrices):
                rows.append(["system", f"{slot}:{_label_or_miss(m)}", " ".join(_flat(m))])
        rows.append(["verdict", verdict.check_name, "pass" if verdict.passed else "fail"])
        return _csv(["section", "name", "values"], rows), code

    lines = [
        f"u = {u.to_text()}  (norm_sq {format_rational(u.norm_sq())})",
        "rotated units:",
        f"  h -> {units.h_u.to_text()}",
        f"  j -> {units.j_u.to_text()}",
        f"  k -> {units.k_u.to_text()}",
        f"  h_u^2 = j_u^2 = k_u^2 = h_u j_u k_u = -1: {'yes' if units_ok else 'NO'}",
        "U =",
        _indent(U.to_text()),
        f"system ({name}): " + ", ".join(_triple_labels(system)),
    ]
    if moved:
        lines.append("transformed system U M U^T:")
        for slot, m in zip("HJK", moved.matrices):
            lines.append(f"  {slot}' = {_label_or_miss(m)}")
            lines.append(_indent(m.to_text(), "    "))
    lines.append(f"verdict: {'PASS' if verdict.passed else 'FAIL'}  {verdict.detail}")
    return "\n".join(lines) + "\n", code


def _triple_json(t: HamiltonTriple) -> dict[str, Any]:
    return {"labels": [_label_or_miss(m) for m in t.matrices], "matrices": [m.to_json() for m in t.matrices]}


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    def add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
        kw = {"default": argparse.SUPPRESS} if suppress else {}
        p.add_argument("--format", choices=FORMATS, help="output format (default: text)", **({"default": "text"} | kw))
        p.add_argument("--seed", type=int, help="seed for randomized suites (default: 0)", **({"default": 0} | kw))
        p.add_argument("--samples", type=int, help="random samples per check (default: 100)", **({"default": 100} | kw))

    parser = argparse.ArgumentParser(
        prog="quatrep",
        description="Exact quaternion matrix representations and Hamiltonian unit systems.",
    )
    add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rep", help="print the left or right multiplication matrix of q")
    p.add_argument("--side", choices=("left", "right"), required=True)
    p.add_argument("--q", required=True, help='quaternion "q0,q1,q2,q3"; components are integers or num/den')
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("generators", help="print L_h, L_j, L_k, R_h, R_j, R_k")
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("enumerate", help="run an exhaustive search")
    p.add_argument("target", choices=tuple(ENUMERATIONS))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run seeded property suites")
    p.add_argument("suite", choices=("all",) + SUITES)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rotate", help="conjugate by u and transform a Hamiltonian system")
    p.add_argument("--u", required=True, help='nonzero quaternion "u0,u1,u2,u3"')
    group = p.add_mutually_exclusive_group()
    group.add_argument("--system", choices=("left", "right"), default="left")
    group.add_argument("--matrices", help="JSON array of 3 matrices, inline or as a file path")
    p.set_defaults(func=cmd_rotate)

    for action in sub.choices.values():
        add_common(action, suppress=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
