"""Command line reports.

Every command builds a :class:`Report` (schema tag, command echo, payload)
and renders it as JSON or as markdown.  Both renderings come from the same
payload, so they carry the same numbers.  Exit codes: 0 success, 2 unknown
case/model or bad flags/input, 3 an internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import Any, Sequence

from . import catalog, classify, models
from .tensor import Multivector, SkewEndo
from .textio import InputFormatError, form_terms, fraction_text, parse_form, parse_gamma, skew_entries
from .weights import CharacterError, RealType, char_equal, real_types, tensor_ms, wedge_power_ms, weyl_dim

SCHEMA = "gstructures-report/1"
MODEL_NAMES = tuple(models.EXPECTED_DIM)


class ConsistencyError(RuntimeError):
    """A computed report failed one of its own cross-checks."""


@dataclass(frozen=True)
class Report:
    schema: str
    command: list[str]
    payload: dict

    def to_json(self) -> str:
        body = {"schema": self.schema, "command": self.command, "payload": self.payload}
        return json.dumps(body, indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        body = json.loads(text)
        return cls(body["schema"], body["command"], body["payload"])

    def to_markdown(self) -> str:
        lines = [f"# gstructures {self.command[0] if self.command else ''}".rstrip(), ""]
        lines.append(f"- **schema**: {self.schema}")
        lines.append(f"- **command**: `{' '.join(self.command)}`")
        lines.append("")
        _md_block(self.payload, 2, lines)
        while lines and lines[-1] == "":
            lines.pop()
        return "\n".join(lines) + "\n"


def _scalar(x: Any) -> str:
    if x is None:
        return "null"
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (list, dict)):
        return json.dumps(x, separators=(",", ":"), ensure_ascii=False)
    return str(x)


def _is_table(v: Any) -> bool:
    return bool(v) and isinstance(v, list) and all(isinstance(r, dict) for r in v) and len({tuple(r) for r in v}) == 1


def _md_block(obj: dict, level: int, lines: list[str]) -> None:
    simple = [(k, v) for k, v in obj.items() if not isinstance(v, dict) and not _is_table(v)]
    for k, v in simple:
        lines.append(f"- **{k}**: {_scalar(v)}")
    if simple:
        lines.append("")
    for k, v in obj.items():
        if isinstance(v, dict):
            lines.append(f"{'#' * level} {k}")
            lines.append("")
            _md_block(v, level + 1, lines)
        elif _is_table(v):
            heads = list(v[0])
            lines.append(f"{'#' * level} {k}")
            lines.append("")
            lines.append("| " + " | ".join(heads) + " |")
            lines.append("|" + "|".join("---" for _ in heads) + "|")
            for row in v:
                lines.append("| " + " | ".join(_scalar(row[h]) for h in heads) + " |")
            lines.append("")


def _num(x) -> int | str:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else fraction_text(x)


def _skew(omega: SkewEndo) -> list[dict]:
    return [{"i": i, "j": j, "value": v} for i, j, v in skew_entries(omega)]


def _real_type(t: RealType) -> dict:
    return {
        "dim": t.real_dim,
        "multiplicity": t.multiplicity,
        "irreps": t.label,
        "highest_weights": [list(m.hw) for m in t.members],
    }


def _dims(types: Sequence[RealType]) -> list[int]:
    return [t.real_dim for t in types for _ in range(t.multiplicity)]


def _case_header(case: catalog.CaseStudy) -> dict:
    return {"case": case.name, "group": case.group, "n": case.n, "dim_g": case.dim_g}


def _cmd_cases(args) -> dict:
    rows = []
    for name in catalog.CASE_NAMES:
        c = catalog.build_case(name)
        rows.append({**_case_header(c), "model": catalog.MODEL_FOR_CASE.get(name)})
    return {"cases": rows, "models": list(MODEL_NAMES)}


def _cmd_decompose(args) -> dict:
    case = catalog.build_case(args.case)
    rep = catalog.torsion_report(case, use_models=False)
    return {
        **_case_header(case),
        "m": [_real_type(t) for t in rep.m],
        "components": [_real_type(t) for t in rep.types],
        "lambda3": [_real_type(t) for t in rep.lambda3],
        "flags": {"admissible": _dims(rep.admissible), "excluded": _dims(rep.excluded)},
    }


def _cmd_torsion(args) -> dict:
    case = catalog.build_case(args.case)
    rep = catalog.torsion_report(case)
    return {
        **_case_header(case),
        "dim_m": comb(case.n, 2) - case.dim_g,
        "lambda3_dim": comb(case.n, 3),
        "theta1_rank": rep.theta1_rank,
        "model": catalog.MODEL_FOR_CASE.get(case.name),
        "types": [_real_type(t) for t in rep.types],
        "admissible": [_real_type(t) for t in rep.admissible],
        "excluded": [_real_type(t) for t in rep.excluded],
        "flags": {
            "unique_connection": rep.unique_connection,
            "conformal_closed": rep.conformal_closed,
            "prop2_holds": rep.prop2_holds,
        },
    }


def _model(name: str) -> models.StabilizerModel:
    if name not in models.EXPECTED_DIM:
        raise KeyError(f"unknown model {name!r}; known: {', '.join(MODEL_NAMES)}")
    return models.stabilizer_algebra(models.defining_tensor(name))


def _cmd_theta_rank(args) -> dict:
    model = _model(args.model)
    th = models.theta_maps(model)
    l3 = comb(model.n, 3)
    return {
        "model": args.model,
        "kind": model.tensor.kind,
        "n": model.n,
        "dim_g": model.dim_g,
        "dim_m": model.dim_m,
        "lambda3_dim": l3,
        "theta1": {"rows": th.theta1.rows, "cols": th.theta1.cols, "rank": th.rank1},
        "theta2": {"rows": th.theta2.rows, "cols": th.theta2.cols, "rank": th.theta2.rank()},
        "injective": th.rank1 == l3,
        "surjective": th.rank1 == th.theta1.rows,
        "tensor_detection_rank": models.tensor_detection_rank(model),
    }


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc.strerror}") from None


def _cmd_solve_torsion(args) -> dict:
    model = _model(args.model)
    gamma = parse_gamma(_read(args.gamma), model.n)
    try:
        sol = models.solve_torsion(model, gamma)
    except ValueError as exc:
        raise InputFormatError(f"Gamma is not in R^n (x) m: {exc}") from None
    out: dict = {"model": args.model, "n": model.n}
    if isinstance(sol, models.NoSolution):
        out.update(status="none", torsion=[], kernel_dim=0, kernel=[], verified=True)
        return out
    T = sol.T if isinstance(sol, models.Unique) else sol.T0
    lhs = models.theta1_apply(model, T)
    verified = all(a == -2 * b for a, b in zip(lhs, gamma))
    if not verified:
        raise ConsistencyError("back-substitution Theta_1(T) = -2 Gamma failed")
    kernel = [] if isinstance(sol, models.Unique) else [form_terms(k) for k in sol.kernel]
    out.update(
        status="unique" if isinstance(sol, models.Unique) else "family",
        torsion=form_terms(T),
        kernel_dim=len(kernel),
        kernel=kernel,
        verified=verified,
    )
    return out


def _isotropy_payload(model, T: Multivector, iso: list[SkewEndo]) -> dict:
    S = models.torsion_square(T)
    closed = all(models.span_contains(iso, a.bracket(b)) for a in iso for b in iso)
    if not closed:
        raise ConsistencyError("isotropy output is not closed under the bracket")
    return {
        "n": T.dim,
        "torsion": form_terms(T),
        "torsion_square": [[_num(x) for x in row] for row in S],
        "dim_gT": len(iso),
        "abelian": all(not a.bracket(b) for a in iso for b in iso),
        "automorphism_bound": T.dim + len(iso),
        "basis": [_skew(x) for x in iso],
    }


def _cmd_isotropy(args, parser) -> dict:
    if args.example and (args.model or args.torsion):
        parser.error("--example cannot be combined with --model/--torsion")
    if args.example:
        res = models.heisenberg_example() if args.example == "heisenberg" else models.solvable_example()
        model = models.stabilizer_algebra(models.defining_tensor("g2-3form"))
        out = {"example": args.example, "model": "g2-3form"}
        out.update(_isotropy_payload(model, res.torsion, res.isotropy))
        if args.example == "heisenberg":
            out["constrained_dim"] = len(res.constrained)
            out["ricci"] = list(models.HEISENBERG_RICCI)
        else:
            out["contains_printed_basis"] = all(
                models.span_contains(res.isotropy, m) for m in models.SOLVABLE_TORUS_BASIS
            )
        return out
    if not (args.model and args.torsion):
        parser.error("isotropy needs --example, or both --model and --torsion")
    model = _model(args.model)
    T = parse_form(_read(args.torsion), model.n, 3)
    out = {"model": args.model}
    out.update(_isotropy_payload(model, T, models.isotropy_algebra(model, T)))
    return out


def _cmd_classify(args) -> dict:
    traces = classify.enumerate_cases()
    surv = classify.survivors(traces)
    su3 = classify.involution_p(8, 4, 5)
    spin7 = []
    for r, z in sorted(classify.spin7_centralizer_dims().items()):
        res = classify.involution_p(21, z, 8)
        spin7.append(
            {"r": r, "z": z, "raw_roots": list(res.raw_roots), "candidates": list(res.candidates), "central": res.central}
        )
    families = []
    for fam in ("G2", "F4", "E6", "E7", "E8", "SU", "SO", "Sp"):
        v = classify.involution_property(fam)
        families.append({"family": fam, "holds": v.holds})
    return {
        "rank_bound": classify.rank_bound(),
        "survivors": [{"t": c.t, "k": c.k, "n": c.n, "dim_g": _num(c.g)} for c in surv],
        "traces": [
            {
                "t": c.t,
                "k": c.k,
                "g": _num(c.g),
                "n": c.n,
                "verdict": c.verdict,
                "rule": c.rule,
                "detail": c.detail,
                "subtraces": list(c.subtraces),
            }
            for c in traces
        ],
        "involution": {
            "su3": {"g": su3.g, "z": su3.z, "n": su3.n, "raw_roots": list(su3.raw_roots), "candidates": list(su3.candidates)},
            "spin7": spin7,
        },
        "involution_property": families,
        "e6_dim": {"used": classify.simple_dim("E6"), "variant": classify.E6_DIM_VARIANT},
    }


def _cmd_check_characters(args) -> dict:
    case = catalog.build_case(args.case)
    rs = case.rs
    checks: list[dict] = []

    def check(name: str, ok: bool, detail: str = "") -> None:
        checks.append({"check": name, "passed": bool(ok), "detail": detail})

    defn, adj = case.defining_character(), case.adjoint_character()
    check("defining character is Weyl invariant", defn.is_weyl_invariant())
    check("defining character is self-conjugate", defn.conjugate() == defn)
    check("defining dimension", defn.count() == case.n, f"{defn.count()} vs {case.n}")
    check("adjoint character is Weyl invariant", adj.is_weyl_invariant())
    check("adjoint dimension", adj.count() == rs.dim, f"{adj.count()} vs {rs.dim}")
    m = catalog.complement_m(case)
    check("m = Lambda^2 - g is a character", m.dim == comb(case.n, 2) - case.dim_g, f"dim m = {m.dim}")
    gam = catalog.gamma_types(case)
    l3 = catalog.lambda3_types(case)
    check(
        "R^n (x) m round trip",
        char_equal(gam.character(), tensor_ms(defn, m.character())),
        f"dim {gam.dim}",
    )
    check("Lambda^3 round trip", char_equal(l3.character(), wedge_power_ms(defn, 3)), f"dim {l3.dim}")
    irreps = {ir.hw: ir for dec in (m, gam, l3) for ir, _ in dec.summands}
    for hw in sorted(irreps):
        ir = irreps[hw]
        count = ir.weights().count()
        check(f"Freudenthal count of {ir.label}", count == weyl_dim(rs, hw), f"{count} vs {weyl_dim(rs, hw)}")
    for label, dec in (("m", m), ("R^n (x) m", gam), ("Lambda^3", l3)):
        types = real_types(dec)
        check(f"real types of {label} cover it", sum(t.real_dim * t.multiplicity for t in types) == dec.dim)
    out = {**_case_header(case), "checks": checks, "all_passed": all(c["passed"] for c in checks)}
    if not out["all_passed"]:
        failed = ", ".join(c["check"] for c in checks if not c["passed"])
        raise ConsistencyError(f"character checks failed: {failed}", out)
    return out


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "markdown"), default=argparse.SUPPRESS)
    p = argparse.ArgumentParser(prog="gstructures", description="Exact G-structure torsion reports.", parents=[fmt])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("cases", parents=[fmt], help="list the case studies and matrix models")
    for name, helptext in (
        ("decompose", "decompose m, R^n (x) m and Lambda^3 for a case"),
        ("torsion", "skew-torsion admissibility flags for a case"),
        ("check-characters", "run the character consistency checks for a case"),
    ):
        sp = sub.add_parser(name, parents=[fmt], help=helptext)
        sp.add_argument("case")
    sp = sub.add_parser("theta-rank", parents=[fmt], help="exact ranks of the Theta maps of a model")
    sp.add_argument("model")
    sp = sub.add_parser("solve-torsion", parents=[fmt], help="solve Theta_1(T) = -2 Gamma")
    sp.add_argument("model")
    sp.add_argument("--gamma", required=True, help="file with 'dir i j p/q' lines")
    sp = sub.add_parser("isotropy", parents=[fmt], help="isotropy algebra of a torsion form")
    sp.add_argument("--example", choices=("heisenberg", "solvable"))
    sp.add_argument("--model")
    sp.add_argument("--torsion", help="file with 'i j k p/q' lines")
    sub.add_parser("classify", parents=[fmt], help="replay the dimension/rank search")
    return p


_COMMANDS = {
    "cases": _cmd_cases,
    "decompose": _cmd_decompose,
    "torsion": _cmd_torsion,
    "theta-rank": _cmd_theta_rank,
    "solve-torsion": _cmd_solve_torsion,
    "classify": _cmd_classify,
    "check-characters": _cmd_check_characters,
}


def _emit(report: Report, fmt: str, out) -> None:
    out.write(report.to_json() if fmt == "json" else report.to_markdown())


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = getattr(args, "format", "markdown")
    echo = [a for a in argv]
    try:
        if args.command == "isotropy":
            payload = _cmd_isotropy(args, parser)
        else:
            payload = _COMMANDS[args.command](args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except KeyError as exc:
        err.write(f"error: {exc.args[0]}\n")
        return 2
    except InputFormatError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except ConsistencyError as exc:
        if len(exc.args) > 1:
            _emit(Report(SCHEMA, echo, exc.args[1]), fmt, out)
        err.write(f"consistency failure: {exc.args[0]}\n")
        return 3
    except (CharacterError, AssertionError) as exc:
        err.write(f"consistency failure: {exc}\n")
        return 3
    _emit(Report(SCHEMA, echo, payload), fmt, out)
    return 0


def main() -> None:
    sys.exit(run())
