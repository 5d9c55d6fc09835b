"""Command-line front end: queries as JSON/table artifacts plus the full
self-check suite.

Exit codes: 0 success, 1 any self-check failure, 2 usage or precondition
error.  All rationals are written ``p/q``; decimals are never parsed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .affine import eta_membership_check, reflected_base, simple_root_set_json
from .catalog import (AlgebraId, algebra_json, build_algebra, selfcheck_algebra)
from .classify import (AffineModuleLabel, A_value, DominantWeight, Level,
                       WModuleLabel, affine_record_json,
                       classify_affine_modules, classify_w_modules,
                       cross_identity_report, hamiltonian_reduce,
                       in_truncated_cone, in_unitarity_range, is_extremal,
                       level_M, standard_levels, unitarity_verdict,
                       w_record_json)
from .ledger import check_d21_cone, run_level_ledger
from .report import Report
from .scalars import rational, rational_str

SELFCHECK_ALGEBRAS = (
    "psl2-2", "spo2-3", "spo2-5", "spo2-6", "spo2-7", "spo2-8",
    "d21-2-1", "d21-3-1", "d21-3-2", "d21-5-2", "d21-5-3", "f4", "g3",
)
CONE_PAIRS = ((2, 1), (3, 1), (3, 2), (5, 2), (5, 3))

_RATIONAL_FLAGS = ("--k", "--h", "--ell0")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _join_rational_values(argv: list[str]) -> list[str]:
    # "--k -3/4" confuses argparse (the value looks like a flag); fold it in
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _RATIONAL_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _build_parser() -> _Parser:
    parser = _Parser(prog="walg", description=__doc__)
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("info", help="full static data of one algebra, as JSON")
    p.add_argument("algebra")

    p = sub.add_parser("range", help="unitarity-range membership and the levels M_i(k)")
    p.add_argument("algebra")
    p.add_argument("--k", required=True)

    p = sub.add_parser("modules", help="classification of irreducible highest-weight modules")
    p.add_argument("algebra")
    p.add_argument("--k", required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--affine", action="store_true",
                       help="affine labels (nu, h) instead of W-labels")
    group.add_argument("--w", action="store_true",
                       help="W-labels (nu, ell0); the default")
    p.add_argument("--json", action="store_true")
    p.add_argument("--ledger", action="store_true",
                   help="append the ledger report section to the JSON catalog")

    p = sub.add_parser("unitary", help="three-valued unitarity verdict for one W-label")
    p.add_argument("algebra")
    p.add_argument("--k", required=True)
    p.add_argument("--nu", required=True,
                   help="comma-separated nonnegative integers over the fundamental weights")
    p.add_argument("--ell0", required=True)

    p = sub.add_parser("reduce", help="quantum Hamiltonian reduction of an affine label")
    p.add_argument("algebra")
    p.add_argument("--k", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--h", required=True)

    p = sub.add_parser("reflect", help="doubly odd-reflected base and the eta membership check")
    p.add_argument("algebra")

    p = sub.add_parser("selfcheck", help="catalog and ledger verification suites")
    p.add_argument("--all", action="store_true",
                   help="include the level-dependent ledger and cross-identity grids")
    p.add_argument("--json", action="store_true")

    return parser


def _parse_nu(alg, text: str) -> DominantWeight:
    try:
        coeffs = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise _UsageError(f"--nu expects comma-separated integers, got {text!r}") from exc
    return DominantWeight(alg.id, coeffs)


def _dump(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _catalog_header(lvl: Level) -> dict:
    return {
        "tool": "walg",
        "version": __version__,
        "algebra": lvl.name,
        "k": rational_str(lvl.k),
        "M": [rational_str(m) for m in level_M(lvl)],
    }


def _cmd_info(args) -> tuple[int, str]:
    alg = build_algebra(AlgebraId.parse(args.algebra))
    return 0, _dump(algebra_json(alg))


def _cmd_range(args) -> tuple[int, str]:
    alg = build_algebra(AlgebraId.parse(args.algebra))
    lvl = Level(alg, rational(args.k))
    payload = {
        "algebra": lvl.name,
        "k": rational_str(lvl.k),
        "in_range": in_unitarity_range(lvl),
        "M": [rational_str(m) for m in level_M(lvl)],
    }
    return 0, _dump(payload)


def _cmd_modules(args) -> tuple[int, str]:
    alg = build_algebra(AlgebraId.parse(args.algebra))
    lvl = Level(alg, rational(args.k))
    payload = _catalog_header(lvl)
    if args.affine:
        payload["kind"] = "affine"
        records = [affine_record_json(r) for r in classify_affine_modules(lvl)]
    else:
        payload["kind"] = "w"
        payload["positive_energy_complete"] = True
        records = [w_record_json(r) for r in classify_w_modules(lvl)]
    payload["modules"] = records
    if args.ledger:
        payload["ledger"] = run_level_ledger(lvl).to_json()
    if args.json:
        return 0, _dump(payload)
    lines = [f"{payload['algebra']}  k={payload['k']}  M={','.join(payload['M'])}"]
    for rec in records:
        nu = ",".join(str(c) for c in rec["nu_coeffs"])
        kind = "extremal" if rec["extremal"] else "generic"
        if args.affine:
            h = rec["h"] if isinstance(rec["h"], str) else " or ".join(rec["h"])
            lines.append(f"  nu=({nu})  h={h}  [{kind}]")
        else:
            lines.append(f"  nu=({nu})  ell0={rec['ell0']}  A={rec['A']}"
                         f"  [{kind}]  {rec['unitarity']}")
    return 0, "\n".join(lines) + "\n"


def _cmd_unitary(args) -> tuple[int, str]:
    alg = build_algebra(AlgebraId.parse(args.algebra))
    lvl = Level(alg, rational(args.k))
    nu = _parse_nu(alg, args.nu)
    label = WModuleLabel(nu, rational(args.ell0))
    verdict = unitarity_verdict(lvl, label)
    payload = {
        "algebra": lvl.name,
        "k": rational_str(lvl.k),
        "nu": list(nu.coeffs),
        "ell0": rational_str(label.ell0),
        "extremal": is_extremal(lvl, nu) if in_truncated_cone(lvl, nu) else None,
        "A": rational_str(A_value(lvl, nu)),
        "verdict": str(verdict),
    }
    return 0, _dump(payload)


def _cmd_reduce(args) -> tuple[int, str]:
    alg = build_algebra(AlgebraId.parse(args.algebra))
    lvl = Level(alg, rational(args.k))
    nu = _parse_nu(alg, args.nu)
    label = AffineModuleLabel(nu, rational(args.h))
    reduced = hamiltonian_reduce(lvl, label)
    payload = {
        "algebra": lvl.name,
        "k": rational_str(lvl.k),
        "nu": list(nu.coeffs),
        "h": rational_str(label.h),
    }
    if reduced is None:
        payload["result"] = "zero"
    else:
        payload["result"] = {
            "nu_coeffs": list(reduced.nu.coeffs),
            "ell0": rational_str(reduced.ell0),
        }
    return 0, _dump(payload)


def _cmd_reflect(args) -> tuple[int, str]:
    alg = build_algebra(AlgebraId.parse(args.algebra))
    report = eta_membership_check(alg)
    payload = {
        "algebra": alg.id.name,
        "reflected_base": simple_root_set_json(reflected_base(alg)),
        "eta_checks": report.to_json(),
        "pass": report.all_pass,
    }
    return (0 if report.all_pass else 1), _dump(payload)


def _selfcheck_report(run_all: bool) -> Report:
    report = Report()
    for name in SELFCHECK_ALGEBRAS:
        alg = build_algebra(AlgebraId.parse(name))
        report.extend(selfcheck_algebra(alg))
        report.extend(eta_membership_check(alg))
    for name in SELFCHECK_ALGEBRAS:
        alg = build_algebra(AlgebraId.parse(name))
        if run_all:
            if alg.id.family == "d21":
                count = 2
            elif alg.rank_natural >= 3:
                count = 6  # deep levels of high-rank cones get large
            else:
                count = 10
        else:
            count = 2
        for k in standard_levels(alg.id, count):
            lvl = Level(alg, k)
            report.extend(run_level_ledger(lvl))
            if run_all:
                report.extend(cross_identity_report(lvl))
    for m, n in CONE_PAIRS:
        for q in range(1, 5 if run_all else 2):
            report.extend(check_d21_cone(m, n, q))
    return report


def _cmd_selfcheck(args) -> tuple[int, str]:
    report = _selfcheck_report(args.all)
    if args.json:
        payload = {
            "tool": "walg",
            "version": __version__,
            "checks": len(report.entries),
            "pass": report.all_pass,
            "entries": report.to_json(),
        }
        return (0 if report.all_pass else 1), _dump(payload)
    lines = []
    for entry in report.failures():
        lines.append(entry.line())
    status = "all pass" if report.all_pass else f"{len(report.failures())} FAILED"
    lines.append(f"selfcheck: {len(report.entries)} checks, {status}")
    return (0 if report.all_pass else 1), "\n".join(lines) + "\n"


_COMMANDS = {
    "info": _cmd_info,
    "range": _cmd_range,
    "modules": _cmd_modules,
    "unitary": _cmd_unitary,
    "reduce": _cmd_reduce,
    "reflect": _cmd_reflect,
    "selfcheck": _cmd_selfcheck,
}


def run_command(argv: list[str]) -> tuple[int, str]:
    """Execute one CLI invocation; returns (exit_code, stdout_text)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(_join_rational_values(list(argv)))
        if args.command is None:
            raise _UsageError(parser.format_usage())
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        return 2, str(exc)
    except (ValueError, ZeroDivisionError) as exc:
        return 2, f"walg: error: {exc}\n"


def main(argv: list[str] | None = None) -> None:
    code, text = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code == 0 else sys.stderr
    stream.write(text)
    raise SystemExit(code)


if __name__ == "__main__":
    main()
