"""Command-line front end.

    flagbound bound su --p 2 --p-prime 1 --r 1 --r-prime 1 [--format json|csv|md]
    flagbound bound sp --n 3 --p 1 --q 1
    flagbound partition sp --n 3 --p 1 --q 1
    flagbound sweep su --max-n 4 [--format csv] [--out PATH]
    flagbound verify sp --max-n 4 [--trials 100] [--seed 0]

Exit codes: 0 success, 1 usage or validation error, 2 verification inconsistency.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

from .concavity import ConcavityReport, d_ma, report
from .domains import (
    DomainSpec,
    SpSpec,
    SUSpec,
    enumerate_specs,
    partition,
    q0_roots,
    validate,
)
from .oracle import (
    Functional,
    build_basis,
    q0_member,
    random_functional,
    s_hat_codim,
    transversality_check,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCONSISTENT = 2

PARAM_COLUMNS = {"su": ["p", "p_prime", "r", "r_prime"], "sp": ["n", "p", "q"]}
TAIL_COLUMNS = [
    "dim_u_minus",
    "d_ma",
    "paper_bound",
    "derived_bound_su",
    "paper_formula_match",
    "convex_degenerate",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _add_family(sub: argparse._SubParsersAction) -> None:
    su = sub.add_parser("su")
    su.add_argument("--p", type=int, required=True)
    su.add_argument("--p-prime", type=int, required=True)
    su.add_argument("--r", type=int, required=True)
    su.add_argument("--r-prime", type=int, required=True)
    sp = sub.add_parser("sp")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    for p in (su, sp):
        p.add_argument("--format", choices=["json", "csv", "md"], default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flagbound", description="Pseudoconcavity lower bounds for flag domains")
    cmds = parser.add_subparsers(dest="command", required=True)

    for name in ("bound", "partition"):
        fam = cmds.add_parser(name).add_subparsers(dest="family", required=True)
        _add_family(fam)

    sweep = cmds.add_parser("sweep")
    sweep.add_argument("family", choices=["su", "sp"])
    sweep.add_argument("--max-n", type=int, required=True)
    sweep.add_argument("--format", choices=["json", "csv", "md"], default="json")
    sweep.add_argument("--out")

    verify = cmds.add_parser("verify")
    verify.add_argument("family", choices=["su", "sp"])
    verify.add_argument("--max-n", type=int, required=True)
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--seed", type=int, default=0)
    return parser


def _spec_from_args(args: argparse.Namespace) -> DomainSpec:
    if args.family == "su":
        return SUSpec(args.p, args.p_prime, args.r, args.r_prime)
    return SpSpec(args.n, args.p, args.q)


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def report_row(rep: ConcavityReport) -> dict:
    d = rep.to_json()
    row = {"family": d["family"], **d["params"]}
    row.update({k: d[k] for k in TAIL_COLUMNS})
    return row


def _columns(family: str, extra: Sequence[str] = ()) -> list[str]:
    return ["family", *PARAM_COLUMNS[family], *TAIL_COLUMNS, *extra]


def render_table(rows: list[dict], columns: list[str], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([_cell(row[c]) for c in columns])
        return buf.getvalue()
    lines = ["| " + " | ".join(columns) + " |", "|" + "---|" * len(columns)]
    for row in rows:
        lines.append("| " + " | ".join(_cell(row[c]) for c in columns) + " |")
    return "\n".join(lines) + "\n"


def render_report(rep: ConcavityReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep.to_json(), indent=2) + "\n"
    d = rep.to_json()
    row = report_row(rep)
    row["argmin"] = d["argmin"]
    row["attractiveness"] = d["attractiveness"]
    return render_table([row], _columns(rep.spec.family, ["argmin", "attractiveness"]), fmt)


def render_partition(part_json: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(part_json, indent=2) + "\n"
    rows = [{"set": k, "roots": v} for k, v in part_json.items()]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["set", "roots"])
        for row in rows:
            w.writerow([row["set"], _cell(row["roots"])])
        return buf.getvalue()
    lines = ["| set | roots |", "|---|---|"]
    lines += [f"| {row['set']} | {_cell(row['roots'])} |" for row in rows]
    return "\n".join(lines) + "\n"


@dataclass
class VerifyResult:
    instances_checked: int = 0
    membership_mismatches: int = 0
    rank_mismatches: int = 0
    theorem_main_violations: int = 0
    maximum_prop_violations: int = 0
    transversality_failures: int = 0
    paper_formula_mismatches: list = field(default_factory=list)

    FAILURE_FIELDS = (
        "membership_mismatches",
        "rank_mismatches",
        "theorem_main_violations",
        "maximum_prop_violations",
        "transversality_failures",
    )

    def ok(self) -> bool:
        return all(getattr(self, f) == 0 for f in self.FAILURE_FIELDS)

    def exit_code(self) -> int:
        return EXIT_OK if self.ok() else EXIT_INCONSISTENT


def trial_seed(seed: int, spec: DomainSpec, trial: int) -> int:
    """Stable per-(seed, instance, trial) seed, independent of evaluation order."""
    key = f"{seed}|{spec.family}|{sorted(spec.params().items())}|{trial}".encode()
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "big")


def verify_instance(spec: DomainSpec, trials: int, seed: int) -> VerifyResult:
    res = VerifyResult(instances_checked=1)
    part = partition(spec)
    basis = build_basis(spec)
    closed_form = q0_roots(spec)
    res.membership_mismatches = sum(
        1 for delta in part.system if q0_member(delta, spec) != (delta in closed_form)
    )
    rep = report(spec, part)
    coord_codims = {}
    for alpha in sorted(part.phi):
        coord_codims[alpha] = s_hat_codim(Functional.coordinate(alpha), part, basis)
        if coord_codims[alpha] != rep.per_alpha[alpha]:
            res.rank_mismatches += 1
        if not transversality_check(alpha, part, basis):
            res.transversality_failures += 1
    if part.phi:
        value = d_ma(part)[0]
        best_coord = min(coord_codims.values())
        for t in range(trials):
            L = random_functional(trial_seed(seed, spec, t), part)
            c = s_hat_codim(L, part, basis)
            res.theorem_main_violations += int(c < value)
            res.maximum_prop_violations += int(c < best_coord)
    if not rep.paper_formula_match:
        res.paper_formula_mismatches.append(
            {"family": spec.family, "params": spec.params(), "d_ma": rep.d_ma, "paper_bound": rep.paper_bound}
        )
    return res


def run_verify(family: str, max_n: int, trials: int, seed: int) -> VerifyResult:
    if trials < 0:
        raise UsageError("--trials must be non-negative")
    specs = list(enumerate_specs(family, max_n))
    if not specs:
        raise UsageError(f"no valid {family} instances with max-n {max_n}")
    total = VerifyResult()
    for spec in specs:
        one = verify_instance(spec, trials, seed)
        total.instances_checked += one.instances_checked
        for f in VerifyResult.FAILURE_FIELDS:
            setattr(total, f, getattr(total, f) + getattr(one, f))
        total.paper_formula_mismatches.extend(one.paper_formula_mismatches)
    return total


def _emit(text: str, out: Optional[str] = None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from exc


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command in ("bound", "partition"):
            spec = _spec_from_args(args)
            violations = validate(spec)
            if violations:
                for v in violations:
                    print(f"invalid {spec}: {v}", file=sys.stderr)
                return EXIT_USAGE
            if args.command == "bound":
                _emit(render_report(report(spec), args.format))
            else:
                _emit(render_partition(partition(spec).to_json(), args.format))
            return EXIT_OK
        if args.max_n < 1:
            raise UsageError("--max-n must be positive")
        if args.command == "sweep":
            rows = [report_row(report(s)) for s in enumerate_specs(args.family, args.max_n)]
            _emit(render_table(rows, _columns(args.family), args.format), args.out)
            return EXIT_OK
        res = run_verify(args.family, args.max_n, args.trials, args.seed)
        out = asdict(res)
        out["ok"] = res.ok()
        _emit(json.dumps(out, indent=2) + "\n")
        return res.exit_code()
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
