"""Run checks, assemble records, and write the JSON Lines report.

Report schema (one JSON object per line, keys sorted):

    {"record": "check", "checkId", "identity", "criterion", "mode",
     "status": "pass" | "fail" | "skipped", "passed", "residualNorm",
     "exactResidualZero", "parts": [...], "wallTime"}
    ...
    {"record": "summary", "seed", "mode", "checks", "passed", "failed",
     "skipped", "maxExactResidual", "maxFloatResidual", "wallTime"}

Check records are ordered by checkId.  ``wallTime`` is the only field that
varies between identical runs.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field

from .checks import CHECKS, Context
from .config import ProblemConfig

REPORT_ENV = "RBMAGNUS_REPORT"
DEFAULT_REPORT = "rbmagnus-report.jsonl"
TIMING_FIELDS = ("wallTime",)
DETERMINISM_ID = "harness-determinism"


class UnknownCheckError(KeyError):
    def __str__(self):
        return self.args[0]


@dataclass
class VerificationReport:
    config: ProblemConfig
    records: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r["status"] != "fail" for r in self.records)

    def record(self, check_id: str) -> dict:
        for r in self.records:
            if r["checkId"] == check_id:
                return r
        raise KeyError(check_id)

    def summary(self) -> dict:
        exact = [p["residual"] for r in self.records for p in r["parts"] if p["mode"] == "exact" and "note" not in p]
        flt = [p["residual"] for r in self.records for p in r["parts"] if p["mode"] == "float" and "note" not in p]
        return {
            "record": "summary",
            "seed": self.config.seed,
            "mode": self.config.mode,
            "checks": len(self.records),
            "passed": sum(r["status"] == "pass" for r in self.records),
            "failed": sum(r["status"] == "fail" for r in self.records),
            "skipped": sum(r["status"] == "skipped" for r in self.records),
            "maxExactResidual": max(exact, default=0.0),
            "maxFloatResidual": max(flt, default=0.0),
            "wallTime": round(self.wall_time, 6),
        }

    def lines(self) -> list:
        out = [json.dumps(r, sort_keys=True) for r in sorted(self.records, key=lambda r: r["checkId"])]
        out.append(json.dumps(self.summary(), sort_keys=True))
        return out

    def dumps(self) -> str:
        return "\n".join(self.lines()) + "\n"

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.dumps())

    def text_summary(self) -> str:
        rows = []
        for r in sorted(self.records, key=lambda r: r["checkId"]):
            rows.append(f"{r['status'].upper():7s} {r['checkId']:24s} residual={r['residualNorm']:.3e}  {r['wallTime']:.2f}s")
        s = self.summary()
        rows.append(
            f"{s['passed']} passed, {s['failed']} failed, {s['skipped']} skipped"
            f" | max exact residual {s['maxExactResidual']:.3e}"
            f" | max float residual {s['maxFloatResidual']:.3e}"
        )
        return "\n".join(rows)


def strip_timing(line_or_record):
    """Drop timing fields from a record (dict) or a report line (str)."""
    rec = json.loads(line_or_record) if isinstance(line_or_record, str) else dict(line_or_record)
    for key in TIMING_FIELDS:
        rec.pop(key, None)
    return rec


def _make_record(spec, ctx: Context, elapsed: float) -> dict:
    parts = [p.to_dict() for p in ctx.parts]
    if not parts:
        status = "skipped"
    else:
        status = "pass" if all(p["passed"] for p in parts) else "fail"
    measured = [p for p in parts if "note" not in p]
    exact = [p["residual"] for p in measured if p["mode"] == "exact"]
    modes = sorted({p["mode"] for p in parts})
    return {
        "record": "check",
        "checkId": spec.check_id,
        "identity": spec.identity,
        "criterion": spec.criterion,
        "mode": "+".join(modes) if modes else "none",
        "status": status,
        "passed": status != "fail",
        "residualNorm": max((p["residual"] for p in measured), default=0.0),
        "exactResidualZero": (max(exact) == 0.0) if exact else None,
        "parts": parts,
        "wallTime": round(elapsed, 6),
    }


def _run_one(config: ProblemConfig, check_id: str) -> dict:
    spec = CHECKS[check_id]
    ctx = Context(config, check_id)
    start = time.perf_counter()
    try:
        spec.run(ctx)
    except Exception as err:  # a crashing check is a failed check, not a crashed run
        ctx.expect(f"raised {type(err).__name__}", "error", float("nan"), False, str(err) or type(err).__name__)
    return _make_record(spec, ctx, time.perf_counter() - start)


def _determinism_record(config: ProblemConfig, first: list) -> dict:
    """Re-run every other check and compare records without timing fields."""
    spec = CHECKS[DETERMINISM_ID]
    ctx = Context(config, DETERMINISM_ID)
    start = time.perf_counter()
    ids = [r["checkId"] for r in first]
    second = [_run_one(config, cid) for cid in ids]
    mismatched = [
        a["checkId"]
        for a, b in zip(first, second)
        if json.dumps(strip_timing(a), sort_keys=True) != json.dumps(strip_timing(b), sort_keys=True)
    ]
    ctx.expect(
        f"{len(ids)} checks re-run with identical results",
        "exact+float",
        float(len(mismatched)),
        not mismatched,
        "mismatch: " + ", ".join(mismatched) if mismatched else "",
    )
    return _make_record(spec, ctx, time.perf_counter() - start)


def run_checks(config: ProblemConfig, ids) -> VerificationReport:
    start = time.perf_counter()
    ids = sorted(ids)
    for cid in ids:
        if cid not in CHECKS:
            raise UnknownCheckError(f"unknown check {cid!r}; available: {', '.join(sorted(CHECKS))}")
    records = [_run_one(config, cid) for cid in ids if cid != DETERMINISM_ID]
    if DETERMINISM_ID in ids:
        records.append(_determinism_record(config, list(records) or [_run_one(config, "t-product")]))
    report = VerificationReport(config, sorted(records, key=lambda r: r["checkId"]))
    report.wall_time = time.perf_counter() - start
    return report


def run_verify_all(config: ProblemConfig) -> VerificationReport:
    return run_checks(config, list(CHECKS))


def run_single(config: ProblemConfig, check_id: str) -> VerificationReport:
    if not check_id or check_id not in CHECKS:
        raise UnknownCheckError(f"unknown check {check_id!r}; available: {', '.join(sorted(CHECKS))}")
    return run_checks(config, [check_id])


def report_path(cli_path=None):
    """Report destination: --report, then the environment variable, then the default."""
    return cli_path or os.environ.get(REPORT_ENV) or DEFAULT_REPORT
