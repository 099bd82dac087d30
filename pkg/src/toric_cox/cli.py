"""Command line front end.

``toric-cox validate|cox|euler|reconstruct|verify <file> [--degree d] [--json]``

Exit codes: 0 pass, 1 semantic failure, 2 I/O or parse error, 3 malformed
input.  Reports are deterministic: identical input and flags give byte
identical output.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass

from .cox import (
    cox_data,
    effective_cone,
    effective_weight_form,
    irrelevant_ideal,
    monomial_basis,
)
from .errors import MalformedFan, ToricCoxError
from .euler import (
    build_euler_module,
    check_euler_identity,
    graded_piece_dim,
)
from .fans import (
    Fan,
    anticanonical,
    class_group,
    fan_from_json,
    fan_to_json,
    validate_fan,
)
from .reconstruction import grading_from_json, reconstruct_fan
from .verify import run_verification

Section = tuple[str, tuple[tuple[str, str], ...]]


@dataclass(frozen=True)
class Report:
    command: str
    input_digest: str
    sections: tuple[Section, ...]
    status_ok: bool
    status_code: str = ""
    status_message: str = ""

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "input_digest": self.input_digest,
            "status": (
                {"ok": True}
                if self.status_ok
                else {"ok": False, "code": self.status_code, "message": self.status_message}
            ),
            "sections": [
                {"title": title, "entries": [[k, v] for k, v in entries]}
                for title, entries in self.sections
            ],
        }
        return json.dumps(payload, separators=(",", ":"))

    def to_text(self) -> str:
        lines = [f"toric-cox {self.command}", f"input digest: {self.input_digest}"]
        for title, entries in self.sections:
            lines.append("")
            lines.append(f"[{title}]")
            width = max((len(k) for k, _ in entries), default=0)
            for key, value in entries:
                lines.append(f"  {key.ljust(width)}  {value}")
        lines.append("")
        if self.status_ok:
            lines.append("status: ok")
        else:
            lines.append(f"status: error({self.status_code}): {self.status_message}")
        return "\n".join(lines)


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _read_file(path: str) -> bytes:
    with open(path, "rb") as handle:
        return handle.read()


def _error_report(command: str, digest: str, code: str, message: str) -> Report:
    return Report(
        command=command,
        input_digest=digest,
        sections=(),
        status_ok=False,
        status_code=code,
        status_message=message,
    )


def _vector_str(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _load_fan(path: str) -> tuple[Fan, str]:
    raw = _read_file(path)
    return fan_from_json(raw.decode("utf-8")), _digest(raw)


def cmd_validate(path: str) -> tuple[Report, int]:
    raw = _read_file(path)
    digest = _digest(raw)
    fan = fan_from_json(raw.decode("utf-8"))
    report = validate_fan(fan)
    section: Section = (
        "validation",
        (
            ("simplicial", str(report.simplicial)),
            ("smooth", str(report.smooth)),
            ("complete", str(report.complete)),
        ),
    )
    ok = report.smooth and report.complete
    return (
        Report("validate", digest, (section,), status_ok=ok,
               status_code="" if ok else "not_smooth_complete",
               status_message="" if ok else "fan is not smooth and complete"),
        0 if ok else 1,
    )


def cmd_cox(path: str) -> tuple[Report, int]:
    fan, digest = _load_fan(path)
    cd = cox_data(fan)
    _, degree_map = class_group(fan)
    form = effective_weight_form(cd)
    eff = effective_cone(cd)
    ideal = irrelevant_ideal(cd)
    ideal_monomials = ", ".join(
        str(cd.monomial(e)) for e in ideal.generators
    )
    sections: tuple[Section, ...] = (
        (
            "class group",
            (
                ("rank", str(cd.cl_rank)),
                ("torsion", "none"),
                ("degree matrix rows", "; ".join(_vector_str(r) for r in degree_map.matrix.entries)),
            ),
        ),
        (
            "effective cone",
            (
                ("generators", "; ".join(_vector_str(g) for g in eff.generators)),
                ("facet normals", "; ".join(_vector_str(h) for h in eff.facet_normals)),
            ),
        ),
        (
            "weight form",
            (
                ("coefficients", _vector_str(form.coefficients)),
                ("defining inequalities", "nonnegative on the effective cone, >= 1 on its nonzero lattice points"),
                ("values on variable degrees", _vector_str([form(d) for d in cd.variable_degrees()])),
            ),
        ),
        (
            "irrelevant ideal",
            (("generators", ideal_monomials),),
        ),
        (
            "anticanonical",
            (
                ("coefficients", _vector_str(anticanonical(fan).coefficients)),
                ("class", _vector_str(cd.degree_map(anticanonical(fan).coefficients))),
            ),
        ),
    )
    return Report("cox", digest, sections, status_ok=True), 0


def cmd_euler(path: str, degree: tuple[int, ...] | None) -> tuple[Report, int]:
    fan, digest = _load_fan(path)
    cd = cox_data(fan)
    em = build_euler_module(cd)
    form = effective_weight_form(cd)
    if degree is None:
        degree = (0,) * cd.cl_rank
    if len(degree) != cd.cl_rank:
        raise MalformedFan(f"degree must have {cd.cl_rank} coordinates")
    dim = graded_piece_dim(em, degree)
    identity = check_euler_identity(em, form, trials=20)
    sections: tuple[Section, ...] = (
        (
            "module",
            (
                ("rank", str(em.rank)),
                ("basis degrees", "; ".join(_vector_str(d) for d in em.basis_degrees)),
            ),
        ),
        (
            "graded piece",
            (
                ("degree", _vector_str(degree)),
                ("dimension", str(dim)),
                ("ring piece dimension", str(len(monomial_basis(cd, degree)))),
            ),
        ),
        (
            "euler identity spot check",
            (
                ("samples", str(identity.checked)),
                ("counterexamples", str(len(identity.counterexamples))),
            ),
        ),
    )
    ok = identity.ok
    return Report("euler", digest, sections, status_ok=ok,
                  status_code="" if ok else "euler_identity",
                  status_message="" if ok else "euler identity failed"), (0 if ok else 1)


def cmd_reconstruct(path: str) -> tuple[Report, int]:
    raw = _read_file(path)
    digest = _digest(raw)
    grading = grading_from_json(raw.decode("utf-8"))
    fan = reconstruct_fan(grading)
    sections: tuple[Section, ...] = (
        (
            "reconstructed fan",
            (
                ("dim", str(fan.dim)),
                ("rays", "; ".join(_vector_str(r) for r in fan.rays)),
                ("max cones", "; ".join("{" + ", ".join(map(str, c)) + "}" for c in sorted(fan.max_cones))),
                ("fan json", fan_to_json(fan)),
            ),
        ),
    )
    return Report("reconstruct", digest, sections, status_ok=True), 0


def cmd_verify(path: str) -> tuple[Report, int]:
    fan, digest = _load_fan(path)
    results = run_verification(fan)
    entries = tuple(
        (result.name, ("pass: " if result.passed else "FAIL: ") + result.detail)
        for result in results
    )
    ok = all(result.passed for result in results)
    return Report("verify", digest, (("checks", entries),), status_ok=ok,
                  status_code="" if ok else "verification",
                  status_message="" if ok else "some checks failed"), (0 if ok else 1)


def _parse_degree(text: str) -> tuple[int, ...]:
    cleaned = text.strip().strip("()")
    if not cleaned:
        raise argparse.ArgumentTypeError("empty degree")
    try:
        return tuple(int(part) for part in cleaned.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad degree {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toric-cox",
        description="Exact Cox ring and Euler sequence computations on fans",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (
        ("validate", "structural validation and smooth/complete flags"),
        ("cox", "class group, grading, effective cone, weight form, irrelevant ideal"),
        ("euler", "module rank, basis degrees, graded piece dimensions"),
        ("reconstruct", "rebuild the fan from grading data"),
        ("verify", "run the full invariant suite"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file", help="input JSON file")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        if name == "euler":
            p.add_argument(
                "--degree",
                type=_parse_degree,
                default=None,
                help="class vector, comma separated (e.g. 2 or 1,1)",
            )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    command = args.command
    digest = ""
    try:
        raw = _read_file(args.file)
        digest = _digest(raw)
    except OSError as exc:
        report = _error_report(command, digest, "io", str(exc))
        print(report.to_json() if args.json else report.to_text())
        return 2
    try:
        if command == "validate":
            report, code = cmd_validate(args.file)
        elif command == "cox":
            report, code = cmd_cox(args.file)
        elif command == "euler":
            report, code = cmd_euler(args.file, args.degree)
        elif command == "reconstruct":
            report, code = cmd_reconstruct(args.file)
        else:
            report, code = cmd_verify(args.file)
    except json.JSONDecodeError as exc:
        report, code = _error_report(command, digest, "parse", str(exc)), 2
    except MalformedFan as exc:
        report, code = _error_report(command, digest, "malformed", str(exc)), 3
    except ToricCoxError as exc:
        report, code = _error_report(command, digest, type(exc).__name__, str(exc)), 1
    print(report.to_json() if args.json else report.to_text())
    return code


if __name__ == "__main__":
    sys.exit(main())
