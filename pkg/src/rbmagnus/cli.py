"""Command line front end.

    rbmagnus verify [--config FILE] [--seed N] [--mode exact|float|all] [--order N] [--report PATH]
    rbmagnus check ID [same options]
    rbmagnus list
    rbmagnus print-config [--config FILE]

Exit status: 0 when every check passes, 1 when a check fails, 2 for a
configuration or usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import config as cfgmod
from .checks import CHECKS
from .harness import REPORT_ENV, UnknownCheckError, report_path, run_single, run_verify_all

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="TOML configuration file")
    p.add_argument("--seed", type=int, help="override the configured seed")
    p.add_argument("--mode", choices=cfgmod.MODES, help="arithmetic modes to run (default: all)")
    p.add_argument("--order", type=int, help="lambda truncation order for all series checks")
    p.add_argument("--report", help=f"JSON Lines report path (else ${REPORT_ENV}, else default)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rbmagnus", description="Verify Magnus and Rota-Baxter identities.")
    sub = parser.add_subparsers(dest="command", required=True)
    _common(sub.add_parser("verify", help="run every check"))
    check = sub.add_parser("check", help="run one check verbosely")
    check.add_argument("check_id", nargs="?", default="", help="check id (see 'list')")
    _common(check)
    sub.add_parser("list", help="list check ids")
    pc = sub.add_parser("print-config", help="print the effective configuration as TOML")
    pc.add_argument("--config")
    pc.add_argument("--seed", type=int)
    pc.add_argument("--mode", choices=cfgmod.MODES)
    pc.add_argument("--order", type=int)
    return parser


def _load(args) -> cfgmod.ProblemConfig:
    cfg = cfgmod.load(args.config) if args.config else cfgmod.ProblemConfig()
    return cfg.with_overrides(seed=args.seed, mode=args.mode, order=args.order)


def _verbose(report) -> str:
    rows = []
    for rec in report.records:
        rows.append(f"{rec['checkId']}: {rec['identity']}")
        for p in rec["parts"]:
            res = "n/a" if p["residual"] is None else f"{p['residual']:.3e}"
            tol = f" (tol {p['tolerance']:.0e})" if "tolerance" in p else ""
            note = f"  [{p['note']}]" if "note" in p else ""
            mark = "ok  " if p["passed"] else "FAIL"
            rows.append(f"  {mark} {p['mode']:6s} {p['name']}: {res}{tol}{note}")
    return "\n".join(rows)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    if args.command == "list":
        for cid, spec in sorted(CHECKS.items()):
            tag = f"[{spec.criterion}]" if spec.criterion else "[ ]"
            print(f"{cid:24s} {tag:5s} {spec.identity}")
        return EXIT_OK
    try:
        cfg = _load(args)
    except cfgmod.ConfigError as err:
        print(f"config error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    if args.command == "print-config":
        sys.stdout.write(cfgmod.dumps(cfg))
        return EXIT_OK
    try:
        report = run_verify_all(cfg) if args.command == "verify" else run_single(cfg, args.check_id)
    except UnknownCheckError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    if args.command == "check":
        print(_verbose(report))
    print(report.text_summary())
    path = report_path(args.report)
    try:
        report.write(path)
    except OSError as err:
        print(f"cannot write report {path}: {err.strerror}", file=sys.stderr)
        return EXIT_CONFIG
    print(f"report: {path}")
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
