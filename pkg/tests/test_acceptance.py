"""The thirteen acceptance criteria, each judged at its stated tolerance.

The default configuration is run once through the command line; every
criterion then inspects its record.  Tolerances and runtime limits are
written out here rather than read from the configuration, so loosening the
config cannot turn a criterion green.  Each test prints one PASS/FAIL line,
and the lines are repeated in the terminal summary.
"""

import json
import re

import pytest

from conftest import ACCEPTANCE_LINES
from rbmagnus.algebra import Matrix, PolyMatrix, SeqFn
from rbmagnus.cli import main
from rbmagnus.config import ProblemConfig
from rbmagnus.fixpoint import atkinson_factorize
from rbmagnus.rota_baxter import FiniteSumRB, IntegralRB

# criterion -> (check id, float tolerance or None, runtime limit in seconds or None)
CRITERIA = {
    1: ("magnus-dyson", None, 10.0),
    2: ("paradox-defect", None, None),
    3: ("phi-theorem", 1e-8, 5.0),
    4: ("duhamel", 1e-6, None),
    5: ("rb-axiom", 1e-12, None),
    6: ("spitzer", None, None),
    7: ("rb-magnus-duality", None, None),
    8: ("generalized-magnus", 1e-9, None),
    9: ("atkinson-ef", None, None),
    10: ("atkinson-factorization", 1e-10, None),
    11: ("ivp-theorem-rb0", 1e-7, None),
    12: ("findiff", 1e-10, 5.0),
}

# parts of criterion 12 held to a tighter bound than the product formula
FINDIFF_TIGHT = ("B_k series", "discrete Duhamel")

_WALL = re.compile(r'"wallTime": [0-9.eE+-]+')


def _emit(criterion, check_id, ok, detail):
    line = f"criterion {criterion:2d}  {check_id:24s} {'PASS' if ok else 'FAIL'}  {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)


@pytest.fixture(scope="module")
def reports(tmp_path_factory):
    """Two full runs of the default configuration through the command line."""
    d = tmp_path_factory.mktemp("acceptance")
    paths = [d / "first.jsonl", d / "second.jsonl"]
    codes = [main(["verify", "--report", str(p)]) for p in paths]
    texts = [p.read_text(encoding="utf-8") for p in paths]
    records = {}
    for line in texts[0].splitlines():
        rec = json.loads(line)
        if rec["record"] == "check":
            records[rec["checkId"]] = rec
    return {"codes": codes, "texts": texts, "records": records}


def test_default_configuration_matches_the_criteria():
    # the instance sizes the criteria are stated for
    cfg = ProblemConfig()
    assert cfg.algebra.magnus_dim == 3 and cfg.algebra.poly_degree == 2
    assert cfg.orders.lambda_order == 6
    assert cfg.orders.ad_truncation == 20 and cfg.orders.integration_steps == 10_000
    assert cfg.orders.quad_points == 32 and cfg.orders.fuzz_pairs == 100
    assert cfg.orders.fixpoint_order == 5 and cfg.orders.ef_order == 4
    assert cfg.orders.bk_terms == 30 and tuple(cfg.inputs.dismag_sweep) == (5, 10, 20, 30)


def _judge(criterion, rec):
    """Return (ok, detail, failures) for one record."""
    _, tol, limit = CRITERIA[criterion]
    failures = []
    exact_max, float_max = 0.0, 0.0
    for p in rec["parts"]:
        expected_outside = "expected" in p.get("note", "")
        if not p["passed"]:
            failures.append(f"{p['name']} did not pass")
            continue
        if expected_outside:
            continue
        r = p["residual"]
        if p["mode"] == "exact":
            exact_max = max(exact_max, r)
            if r != 0:
                failures.append(f"{p['name']}: exact residual {r}")
        elif p["mode"] == "float":
            float_max = max(float_max, r)
            bound = tol
            if criterion == 12 and p["name"].startswith(FINDIFF_TIGHT):
                bound = 1e-12
            if bound is not None and r > bound:
                failures.append(f"{p['name']}: {r:.3e} > {bound:.0e}")
    if rec["status"] != "pass":
        failures.append(f"status {rec['status']}")
    detail = f"exact max {exact_max:g}"
    if tol is not None:
        detail += f", float max {float_max:.2e} (tol {tol:.0e})"
    if limit is not None:
        detail += f", {rec['wallTime']:.2f}s (limit {limit:.0f}s)"
        if rec["wallTime"] >= limit:
            failures.append(f"runtime {rec['wallTime']:.2f}s >= {limit}s")
    return not failures, detail, failures


def _extra(criterion, rec):
    """Criterion-specific structure beyond residual bounds."""
    names = [p["name"] for p in rec["parts"]]
    missing = []

    def need(fragment):
        if not any(fragment in n for n in names):
            missing.append(f"no part matching {fragment!r}")

    if criterion == 1:
        for n in range(7):
            need(f"order {n}")
    elif criterion == 2:
        need("defect is nonzero")
        need("int [A', A]")
    elif criterion == 3:
        need("exp(-A0)exp(A1) - Texp(int Phi)")
    elif criterion == 5:
        for kind in ("IntegralRB", "FiniteSumRB", "SummationRB", "MinSubRB", "MatrixLiftRB"):
            need(f"{kind} (weight")
        if not all("100 pairs" in n for n in names):
            missing.append("every operator needs 100 pairs")
    elif criterion == 6:
        need("weight 1 scalar sequence order 6")
    elif criterion == 7:
        need("IntegralRB weight 0")
        need("FiniteSumRB weight 1")
    elif criterion == 8:
        need("alpha = 0")
        need("inductive identity n <= 5")
        need("constant alpha")
    elif criterion == 9:
        need("E closed form")
        need("F closed form")
    elif criterion == 10:
        need("X(1 + theta lambda a)Y - 1")
        need("X(1 - lambda a)Y - 1")
        need("commuting constant alpha, beta")
    elif criterion == 11:
        need("alpha = E12, B = E21")
    elif criterion == 12:
        for frag in ("R(Delta f)", "Leibniz", "B_k series (M=30)", "discrete Duhamel", "product over N=5", "residual decreases"):
            need(frag)
    return missing


@pytest.mark.parametrize("criterion", sorted(CRITERIA))
def test_criterion(criterion, reports):
    check_id = CRITERIA[criterion][0]
    rec = reports["records"].get(check_id)
    if rec is None:
        _emit(criterion, check_id, False, "missing from the report")
        pytest.fail(f"{check_id} missing from the report")
    ok, detail, failures = _judge(criterion, rec)
    failures += _extra(criterion, rec)
    ok = ok and not failures
    _emit(criterion, check_id, ok, detail if ok else "; ".join(failures))
    assert ok, failures


def test_criterion_13_determinism(reports):
    a, b = (_WALL.sub('"wallTime": 0', t) for t in reports["texts"])
    ok = a == b and reports["codes"] == [0, 0]
    rec = reports["records"].get("harness-determinism")
    ok = ok and rec is not None and rec["status"] == "pass"
    lines = a.count("\n")
    _emit(13, "harness-determinism", ok, f"two runs, {lines} report lines identical modulo wallTime" if ok else "reports differ")
    assert ok


def test_every_check_appears_once(reports):
    ids = [json.loads(l)["checkId"] for l in reports["texts"][0].splitlines() if '"record": "check"' in l]
    assert len(ids) == len(set(ids))
    assert {cid for cid, _, _ in CRITERIA.values()} | {"harness-determinism"} <= set(ids)


def test_literal_unit_form_outside_weight_minus_one():
    """Informational: X(1 - lambda a)Y = exp(gamma) read literally needs weight -1."""
    e12, e21 = Matrix.elementary(2, 1, 2), Matrix.elementary(2, 2, 1)
    integral = atkinson_factorize(IntegralRB(), PolyMatrix([e12, e21]), 5)
    finite = atkinson_factorize(FiniteSumRB(), SeqFn([e12, e21, e12 + e21, e21]), 5)
    sizes = [float(f.unit_form_residual.norm()) for f in (integral, finite)]
    line = (
        "info         literal 1 - lambda a form       "
        f"nonzero at weight 0 ({sizes[0]:g}) and weight 1 ({sizes[1]:g}); "
        "the 1 + theta lambda a form holds at every weight"
    )
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert all(s > 0 for s in sizes)
    assert integral.residual.is_zero() and finite.residual.is_zero()
