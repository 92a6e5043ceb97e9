"""The verification checks run by the harness.

Each check draws its random instances from a generator keyed by
(seed, check id), evaluates one identity family and reports named parts.
An exact part passes iff its residual is exactly zero; a float part passes iff
its residual is within the stated tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from . import sampling as rs
from .algebra import LaurentSeries, Matrix, MatrixOver, PolyMatrix, SeqFn
from .config import ProblemConfig
from .errors import TieError
from .findiff import (
    DiscreteIVP,
    bk_closed_form,
    bk_from_ak,
    discrete_duhamel_residual,
    dismag_residual,
    dismag_sweep,
    is_monotone_decrease,
    leibniz_residual,
    prefix_residuals,
    product_form,
    solve_findif,
    step_identity_residual,
    sum_form_residual,
    telescoping_residual,
)
from .fixpoint import FixpointProblem, atkinson_ef, atkinson_factorize, picard_solve, spitzer_check
from .lie import mat_exp
from .magnus import (
    evaluate_solution,
    magnus_alpha,
    magnus_classical,
    newmagnus_identity_residuals,
    rb_magnus,
    rb_magnus_alpha,
)
from .rota_baxter import (
    FiniteSumRB,
    IntegralRB,
    MatrixLiftRB,
    MinSubRB,
    RBOperator,
    SummationRB,
    TildeRB,
    check_rb_axiom as rb_axiom_residual,
    r_center_test,
)
from .series import Series, series_exp, series_exp_shifted
from .time_ordering import (
    TimedOperator,
    duhamel_residual,
    paradox_defect,
    paradox_defect_expected,
    phi_map,
    phi_map_double_sum,
    t_ordered_exp_exact,
    t_ordered_exp_float,
    t_product,
    tstar_exp,
)


@dataclass
class Part:
    name: str
    mode: str
    residual: float
    passed: bool
    tolerance: float | None = None
    note: str = ""

    def to_dict(self) -> dict:
        residual = None if self.residual != self.residual else self.residual
        d = {"name": self.name, "mode": self.mode, "residual": residual, "passed": self.passed}
        if self.tolerance is not None:
            d["tolerance"] = self.tolerance
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class Context:
    config: ProblemConfig
    check_id: str
    parts: list = field(default_factory=list)

    def __post_init__(self):
        self.rng = rs.rng_for(self.config.seed, self.check_id)

    def wants(self, mode: str) -> bool:
        return self.config.mode in (mode, "all")

    def exact_zero(self, name: str, value) -> None:
        """Record an exact residual (an element, a series, or a norm)."""
        r = _norm(value)
        self.parts.append(Part(name, "exact", float(r), r == 0))

    def within(self, name: str, value, tol: float) -> None:
        r = float(_norm(value))
        self.parts.append(Part(name, "float", r, bool(r <= tol), tol))

    def expect(self, name: str, mode: str, residual, ok: bool, note: str = "") -> None:
        self.parts.append(Part(name, mode, float(residual), bool(ok), None, note))


def _norm(value):
    if isinstance(value, (int, float, Fraction)):
        return abs(value)
    return value.norm()


def _series_orders(ctx: Context, label: str, residual: Series, exact: bool, tol: float = 0.0) -> None:
    for k, c in enumerate(residual.coeffs):
        if exact:
            ctx.exact_zero(f"{label} order {k}", c)
        else:
            ctx.within(f"{label} order {k}", c, tol)


# ---------------------------------------------------------------- checks


def check_magnus_dyson(ctx: Context) -> None:
    if not ctx.wants("exact"):
        return
    cfg = ctx.config
    A = rs.poly_matrix(ctx.rng, cfg.algebra.magnus_dim, cfg.algebra.poly_degree, exact=True)
    N = cfg.orders.lambda_order
    m = magnus_classical(A, N)
    _series_orders(ctx, "exp(Omega) - Texp", series_exp(m.exponent) - t_ordered_exp_exact(A, N), True)
    if N >= 1:
        ctx.exact_zero("Omega_1 - int A", m.terms[0] - IntegralRB()(A))


def check_paradox_defect(ctx: Context) -> None:
    if not ctx.wants("exact"):
        return
    cfg = ctx.config
    A = rs.poly_matrix(ctx.rng, cfg.algebra.dim, cfg.algebra.poly_degree, exact=True)
    ctx.exact_zero("defect - int [A', A] (random A)", paradox_defect(A) - paradox_defect_expected(A))
    e12, e21 = Matrix.elementary(2, 1, 2), Matrix.elementary(2, 2, 1)
    A0 = PolyMatrix([e12, e21])
    d = paradox_defect(A0)
    ctx.exact_zero("defect - int [A', A] (E12 + t E21)", d - paradox_defect_expected(A0))
    ctx.exact_zero("defect - t [E21, E12]", d - PolyMatrix.monomial(e21 * e12 - e12 * e21, 1))
    ctx.expect("defect is nonzero (E12 + t E21)", "exact", d.norm(), not d.is_zero(), "expected nonzero")


def check_phi_theorem(ctx: Context) -> None:
    cfg = ctx.config
    if ctx.wants("exact"):
        A = rs.poly_matrix(ctx.rng, cfg.algebra.dim, cfg.algebra.poly_degree, exact=True)
        ctx.exact_zero("ad-series vs double-sum (M=5)", phi_map(A, 5) - phi_map_double_sum(A, 5))
    if ctx.wants("float"):
        A = rs.poly_matrix(ctx.rng, cfg.algebra.dim, cfg.algebra.poly_degree, exact=False)
        phi = phi_map(A, cfg.orders.ad_truncation)
        Y = t_ordered_exp_float(phi, 1.0, cfg.orders.integration_steps)
        ctx.within("exp(-A0)exp(A1) - Texp(int Phi)", tstar_exp(A, 1.0) - Y, cfg.tolerances.float_residual)


def check_duhamel(ctx: Context) -> None:
    if not ctx.wants("float"):
        return
    cfg = ctx.config
    A = rs.poly_matrix(ctx.rng, cfg.algebra.dim, cfg.algebra.poly_degree, exact=False)
    r = duhamel_residual(A, cfg.inputs.duhamel_point, h=1e-4, nodes=cfg.orders.quad_points)
    ctx.within("exp(-A) d exp(A) - quadrature", r, cfg.tolerances.duhamel)


def configured_operator(cfg: ProblemConfig) -> RBOperator:
    op = cfg.operator
    if op.kind == "integral":
        return IntegralRB()
    if op.kind == "finite-sum":
        return FiniteSumRB(step=Fraction(op.step))
    if op.kind == "summation":
        return SummationRB(horizon=op.horizon)
    if op.kind == "min-sub":
        return MinSubRB()
    return MatrixLiftRB(MinSubRB())


def _sampler(cfg: ProblemConfig, R: RBOperator, rng, exact: bool = True):
    """Random carrier elements for R."""
    a = cfg.algebra
    inner = R.base if isinstance(R, TildeRB) else R
    if isinstance(inner, IntegralRB):
        return lambda: rs.poly_matrix(rng, a.dim, a.poly_degree, exact)
    if isinstance(inner, SummationRB):
        return lambda: rs.supported_sequence(rng, a.dim, a.sequence_length, min(a.summation_support, inner.horizon - 1))
    if isinstance(inner, FiniteSumRB):
        return lambda: rs.sequence(rng, a.dim, a.sequence_length, exact)
    if isinstance(inner, MinSubRB):
        return lambda: rs.laurent(rng, a.laurent_pole_order, a.laurent_degree)
    return lambda: rs.laurent_matrix(rng, a.dim, a.laurent_pole_order, a.laurent_degree)


def operator_catalogue(cfg: ProblemConfig) -> list:
    ops = [
        IntegralRB(),
        FiniteSumRB(),
        SummationRB(horizon=cfg.operator.horizon),
        MinSubRB(),
        MatrixLiftRB(MinSubRB()),
    ]
    extra = configured_operator(cfg)
    if extra.params() not in [o.params() for o in ops]:
        ops.append(extra)
    return ops


def check_rb_fuzz(ctx: Context) -> None:
    cfg = ctx.config
    pairs = cfg.orders.fuzz_pairs
    if ctx.wants("exact"):
        for R in operator_catalogue(cfg):
            for op, label in ((R, R.kind), (TildeRB(R), f"tilde {R.kind}")):
                draw = _sampler(cfg, op, ctx.rng)
                worst = max(_norm(rb_axiom_residual(op, draw(), draw())) for _ in range(pairs))
                ctx.exact_zero(f"{label} (weight {op.weight}, {pairs} pairs)", worst)
    if ctx.wants("float"):
        for R in (IntegralRB(), FiniteSumRB(step=0.5)):
            draw = _sampler(cfg, R, ctx.rng, exact=False)
            worst = max(float(_norm(rb_axiom_residual(R, draw(), draw()))) for _ in range(pairs))
            ctx.within(f"{R.kind} float (weight {R.weight}, {pairs} pairs)", worst, cfg.tolerances.rb_float)


def check_spitzer(ctx: Context) -> None:
    if not ctx.wants("exact"):
        return
    cfg = ctx.config
    N = cfg.orders.lambda_order
    L = cfg.algebra.sequence_length
    a = rs.scalar_sequence(ctx.rng, L)
    _series_orders(ctx, "weight 1 scalar sequence", spitzer_check(FiniteSumRB(), a, N), True)
    ones = SeqFn.scalars([1] * L)
    ctx.exact_zero("weight 1, a = 1", spitzer_check(FiniteSumRB(), ones, N))
    ctx.exact_zero("weight 1/2 scalar sequence", spitzer_check(FiniteSumRB(step=Fraction(1, 2)), a, N))
    ctx.exact_zero("weight -1 scalar Laurent", spitzer_check(MinSubRB(), rs.laurent(ctx.rng, 1, 1), N))
    if N >= 1:
        flipped = spitzer_check(FiniteSumRB(), ones, N, flipped=True)
        ctx.expect(
            "opposite-sign exponent does not solve the equation",
            "exact",
            flipped.norm(),
            not flipped.is_zero(),
            "expected nonzero; documents the sign convention",
        )


def _duality_cases(cfg: ProblemConfig, rng):
    a = cfg.algebra
    return [
        (IntegralRB(), rs.poly_matrix(rng, a.dim, 1, True)),
        (FiniteSumRB(), rs.sequence(rng, a.dim, a.sequence_length, True)),
        (FiniteSumRB(step=Fraction(-1, 2)), rs.sequence(rng, a.dim, a.sequence_length, True)),
        (SummationRB(horizon=cfg.operator.horizon), rs.supported_sequence(rng, a.dim, a.sequence_length, a.sequence_length)),
        (MatrixLiftRB(MinSubRB()), rs.laurent_matrix(rng, 2, 1, 1)),
    ]


def check_rb_magnus_duality(ctx: Context) -> None:
    if not ctx.wants("exact"):
        return
    N = ctx.config.orders.fixpoint_order
    for R, a in _duality_cases(ctx.config, ctx.rng):
        m = rb_magnus(R, a, N)
        Y = picard_solve(FixpointProblem(R, "plain", a, N))
        ctx.exact_zero(f"{R.kind} weight {R.weight}: exp(R(W)) - Picard", series_exp(m.exponent) - Y)


def check_generalized_magnus(ctx: Context) -> None:
    cfg = ctx.config
    N = cfg.orders.fixpoint_order
    dim = cfg.algebra.dim
    if ctx.wants("exact"):
        for R, a in _duality_cases(cfg, ctx.rng)[:2]:
            m = rb_magnus_alpha(R, a.zero(), a, N)
            X = picard_solve(FixpointProblem(R, "alpha", a, N, alpha=a.zero()))
            ctx.exact_zero(f"{R.kind} alpha = 0: exp(R(W)) - Picard", series_exp(m.exponent) - X)
        K = cfg.orders.identity_terms
        alpha_c = rs.exact_matrix(ctx.rng, dim)
        for R, alpha, beta in (
            (IntegralRB(), PolyMatrix.constant(alpha_c), rs.poly_matrix(ctx.rng, dim, 1, True)),
            (FiniteSumRB(), SeqFn.constant(alpha_c, cfg.algebra.sequence_length), rs.sequence(ctx.rng, dim, cfg.algebra.sequence_length, True)),
        ):
            res = newmagnus_identity_residuals(R, alpha, beta, K)
            worst = max(_norm(r) for r in res)
            ctx.exact_zero(f"{R.kind} inductive identity n <= {K}", worst)
    if ctx.wants("float"):
        e12 = Matrix.elementary(2, 1, 2, exact=False)
        e21 = Matrix.elementary(2, 2, 1, exact=False)
        alpha_c = rs.float_matrix(ctx.rng, 2)
        cases = [
            (IntegralRB(), PolyMatrix.constant(alpha_c), PolyMatrix([e12, e21]), [PolyMatrix([e21, e12])]),
            (
                FiniteSumRB(step=1.0),
                SeqFn.constant(alpha_c, cfg.algebra.sequence_length),
                rs.sequence(ctx.rng, 2, cfg.algebra.sequence_length, False),
                [rs.sequence(ctx.rng, 2, cfg.algebra.sequence_length, False)],
            ),
        ]
        for R, alpha, a, samples in cases:
            m = rb_magnus_alpha(R, alpha, a, N, samples=samples, ad_terms=cfg.orders.ad_terms_alpha)
            X = picard_solve(FixpointProblem(R, "alpha", a, N, alpha=alpha))
            ctx.within(
                f"{R.kind} constant alpha: exp(alpha + R(W)) - Picard",
                series_exp_shifted(alpha, m.exponent) - X,
                cfg.tolerances.alpha_fixpoint,
            )


def check_atkinson_ef(ctx: Context) -> None:
    if not ctx.wants("exact"):
        return
    cfg = ctx.config
    N = cfg.orders.ef_order
    a_ = cfg.algebra
    cases = [
        (IntegralRB(), lambda: rs.poly_matrix(ctx.rng, a_.dim, 1, True)),
        (FiniteSumRB(), lambda: rs.sequence(ctx.rng, a_.dim, a_.sequence_length, True)),
        (FiniteSumRB(), lambda: rs.scalar_sequence(ctx.rng, a_.sequence_length)),
        (MatrixLiftRB(MinSubRB()), lambda: rs.laurent_matrix(ctx.rng, 2, 1, 1)),
    ]
    for R, draw in cases:
        a, b = draw(), draw()
        r = atkinson_ef(R, a, b, N)
        label = f"{R.kind} dim {a.dim}"
        ctx.exact_zero(f"{label}: E closed form - Picard", r.E_residual)
        ctx.exact_zero(f"{label}: F closed form - Picard", r.F_residual)


def check_atkinson_factorization(ctx: Context) -> None:
    cfg = ctx.config
    N = cfg.orders.fixpoint_order
    a_ = cfg.algebra
    if ctx.wants("exact"):
        e12, e21 = Matrix.elementary(2, 1, 2), Matrix.elementary(2, 2, 1)
        cases = [
            (IntegralRB(), PolyMatrix([e12, e21])),
            (IntegralRB(), rs.poly_matrix(ctx.rng, a_.dim, 1, True)),
            (FiniteSumRB(), rs.sequence(ctx.rng, a_.dim, a_.sequence_length, True)),
            (FiniteSumRB(step=Fraction(-1)), rs.sequence(ctx.rng, a_.dim, a_.sequence_length, True)),
            (MatrixLiftRB(MinSubRB()), rs.laurent_matrix(ctx.rng, 2, 1, 1)),
        ]
        for R, a in cases:
            f = atkinson_factorize(R, a, N)
            label = f"{R.kind} weight {R.weight}"
            ctx.exact_zero(f"{label}: X(1 + theta lambda a)Y - 1", f.residual)
            if R.weight == -1:
                ctx.exact_zero(f"{label}: X(1 - lambda a)Y - 1", f.unit_form_residual)
            for i, c in enumerate(f.chain, start=1):
                ctx.exact_zero(f"{label}: XY chain line {i}", c)
    if ctx.wants("float"):
        e12 = Matrix.elementary(2, 1, 2, exact=False)
        e21 = Matrix.elementary(2, 2, 1, exact=False)
        A = PolyMatrix([e12, e21])
        base = rs.float_matrix(ctx.rng, 2, 0.5)
        alpha = PolyMatrix.constant(base)
        beta = PolyMatrix.constant(base * 0.5 + base * base * 0.25)
        f = atkinson_factorize(IntegralRB(), A, N, alpha, beta, samples=[A, PolyMatrix([e21, e12])])
        ctx.within("integral, commuting constant alpha, beta", f.residual, cfg.tolerances.oracle_residual)
        ctx.expect("gamma = alpha + beta available", "float", 0.0, f.gamma is not None)
        for i, c in enumerate(f.chain, start=1):
            ctx.within(f"integral float: XY chain line {i}", c, cfg.tolerances.oracle_residual)


def check_ivp_rb0(ctx: Context) -> None:
    if not ctx.wants("float"):
        return
    cfg = ctx.config
    alpha = Matrix.elementary(2, 1, 2, exact=False)
    B = PolyMatrix([Matrix.elementary(2, 2, 1, exact=False)])
    m = magnus_alpha(alpha, B, cfg.orders.alpha_order, ad_terms=cfg.orders.ad_terms_alpha)
    X1 = evaluate_solution(m, 1.0)
    ref = mat_exp(alpha) * t_ordered_exp_float(B, 1.0, cfg.orders.integration_steps)
    ctx.within(f"alpha = E12, B = E21, order {cfg.orders.alpha_order}", X1 - ref, cfg.tolerances.ivp)
    zero = Matrix.zeros(2, exact=False)
    mz = magnus_alpha(zero, PolyMatrix.constant(zero), 3)
    ctx.within("B = 0 gives exp(alpha) = 1", evaluate_solution(mz, 1.0) - zero.one(), cfg.tolerances.ivp)


def check_findiff(ctx: Context) -> None:
    cfg = ctx.config
    n, L = cfg.algebra.dim, cfg.algebra.sequence_length
    tol = cfg.tolerances
    if ctx.wants("exact"):
        f = rs.sequence(ctx.rng, n, L, True)
        g = rs.sequence(ctx.rng, n, L, True)
        ctx.exact_zero("R(Delta f) - (f - f(0))", telescoping_residual(f))
        ctx.exact_zero("Leibniz rule", leibniz_residual(f, g))
        ctx.exact_zero("weight-1 axiom for the partial sum", rb_axiom_residual(FiniteSumRB(), f, g))
        B = rs.sequence(ctx.rng, n, L, True)
        p = DiscreteIVP(B, Matrix.identity(n))
        try:
            X = solve_findif(p)
        except ArithmeticError as err:
            ctx.expect(f"recursion solve ({err})", "exact", 0.0, False)
        else:
            ctx.exact_zero("recursion vs product form", X - product_form(p))
            ctx.exact_zero("X_n - (X_0 + sum X_k B_k)", sum_form_residual(p, X))
    if ctx.wants("float"):
        A = rs.sequence(ctx.rng, n, L, False)
        M = cfg.orders.bk_terms
        ks = range(L - 1)
        ctx.within(
            f"B_k series (M={M}) - (exp(-A_k)exp(A_k+1) - 1)",
            max(float((bk_from_ak(A[k], A[k + 1], M) - bk_closed_form(A[k], A[k + 1])).norm()) for k in ks),
            tol.findiff,
        )
        ctx.within(
            f"discrete Duhamel ({cfg.orders.quad_points} nodes)",
            max(float(discrete_duhamel_residual(A, k, cfg.orders.quad_points).norm()) for k in ks),
            tol.findiff,
        )
        ctx.within(
            "1 + exp(-A_k) Delta exp(A_k) - exp(-A_k) exp(A_k+1)",
            max(float(step_identity_residual(A, k).norm()) for k in ks),
            tol.findiff,
        )
        ctx.within(f"product over N={L - 1} steps (M={M})", dismag_residual(A, M), tol.dismag)
        ctx.within("every prefix product", max(prefix_residuals(A, M)), tol.dismag)
        sweep = dismag_sweep(A, cfg.inputs.dismag_sweep)
        values = [r for _, r in sweep]
        ctx.expect(
            "residual decreases over M = " + ",".join(str(m) for m, _ in sweep),
            "float",
            values[-1],
            is_monotone_decrease(values),
            "; ".join(f"M={m}: {r:.3e}" for m, r in sweep),
        )


def check_dismag(ctx: Context) -> None:
    if not ctx.wants("float"):
        return
    cfg = ctx.config
    A = rs.sequence(ctx.rng, cfg.algebra.dim, cfg.algebra.sequence_length, False)
    sweep = dismag_sweep(A, cfg.inputs.dismag_sweep)
    for m, r in sweep:
        ctx.expect(f"M = {m}", "float", r, True, "sweep entry")
    values = [r for _, r in sweep]
    ctx.expect("monotone decrease", "float", values[-1], is_monotone_decrease(values))
    ctx.within(f"residual at M = {sweep[-1][0]}", values[-1], cfg.tolerances.dismag)


def check_t_product(ctx: Context) -> None:
    times = ctx.config.inputs.t_product_times
    exact = ctx.wants("exact")
    mats = [rs.matrix(ctx.rng, 2, exact) for _ in times]
    mode = "exact" if exact else "float"
    ops = [TimedOperator(t, m) for t, m in zip(times, mats)]
    if len(set(times)) < len(times):
        try:
            t_product(ops)
        except TieError as err:
            ctx.expect("tied times raise the documented tie error", mode, 0.0, True, f"expected error: {err}")
        else:
            ctx.expect("tied times raise the documented tie error", mode, 0.0, False, "no error raised")
        return
    ref = t_product(ops)
    orders = list(permutations(ops)) if len(ops) <= 6 else [ops, ops[::-1]]
    worst = max(_norm(t_product(p) - ref) for p in orders)
    if exact:
        ctx.exact_zero(f"invariance under {len(orders)} input orders", worst)
    else:
        ctx.within(f"invariance under {len(orders)} input orders", worst, 0.0)
    u, v = mats[0], mats[1] if len(mats) > 1 else mats[0]
    two = t_product([TimedOperator(0.3, u), TimedOperator(0.1, v)])
    ctx.expect("later time sits on the right", mode, float(_norm(two - v * u)), _norm(two - v * u) == 0)


def check_r_center(ctx: Context) -> None:
    if not ctx.wants("exact"):
        return
    cfg = ctx.config
    n = cfg.algebra.dim
    c = rs.exact_matrix(ctx.rng, n)
    polys = [rs.poly_matrix(ctx.rng, n, 2, True) for _ in range(5)]
    seqs = [rs.sequence(ctx.rng, n, cfg.algebra.sequence_length, True) for _ in range(5)]
    ok, worst = r_center_test(IntegralRB(), PolyMatrix.constant(c), polys)
    ctx.expect("constant matrix, integral", "exact", float(worst), ok)
    ok, worst = r_center_test(FiniteSumRB(), SeqFn.constant(c, cfg.algebra.sequence_length), seqs)
    ctx.expect("constant sequence, partial sum", "exact", float(worst), ok)
    t1 = PolyMatrix.monomial(Matrix.identity(n), 1)
    ok, worst = r_center_test(IntegralRB(), t1, [t1.one()])
    ctx.expect("t * 1 is not central for the integral", "exact", float(worst), not ok, "expected outside")
    unit_upper = MatrixOver(
        [[LaurentSeries([1 if i == j else (c[i, j] if j > i else 0)]) for j in range(n)] for i in range(n)]
    )
    lams = [rs.laurent_matrix(ctx.rng, n, 1, 1) for _ in range(5)]
    ok, worst = r_center_test(MatrixLiftRB(MinSubRB()), unit_upper, lams)
    ctx.expect("unit upper triangular constants, lifted pole part", "exact", float(worst), ok)
    full = MatrixOver([[LaurentSeries([c[i, j]]) for j in range(n)] for i in range(n)])
    ok, worst = r_center_test(MatrixLiftRB(MinSubRB()), full, lams)
    ctx.expect("arbitrary constant matrix, lifted pole part", "exact", float(worst), ok)
    R = IntegralRB()
    x = PolyMatrix.constant(c)
    ctx.exact_zero("R(x) = x R(1) for central x", R(x) - x * R(x.one()))


@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    identity: str
    modes: tuple
    run: object
    criterion: int | None = None


CHECKS = {
    spec.check_id: spec
    for spec in (
        CheckSpec("magnus-dyson", "Texp(int A) = exp(Omega), order by order", ("exact",), check_magnus_dyson, 1),
        CheckSpec("paradox-defect", "T[(A_t - A_0)^2] - T[(int A')^2] = int [A', A]", ("exact",), check_paradox_defect, 2),
        CheckSpec("phi-theorem", "exp(-A_0) exp(A_t) = Texp(int Phi(A'))", ("exact", "float"), check_phi_theorem, 3),
        CheckSpec("duhamel", "exp(-A) d exp(A) = int_0^1 exp(-vA) A' exp(vA) dv", ("float",), check_duhamel, 4),
        CheckSpec("rb-axiom", "R(x)R(y) = R(R(x)y + xR(y)) + theta R(xy)", ("exact", "float"), check_rb_fuzz, 5),
        CheckSpec("spitzer", "Y = exp(R(log(1 + theta lambda a)/theta)) (commutative)", ("exact",), check_spitzer, 6),
        CheckSpec("rb-magnus-duality", "exp(R(W)) solves Y = 1 + lambda R(Ya)", ("exact",), check_rb_magnus_duality, 7),
        CheckSpec("generalized-magnus", "exp(alpha + R(W)) solves X = exp(alpha) + lambda R(Xa)", ("exact", "float"), check_generalized_magnus, 8),
        CheckSpec("atkinson-ef", "closed forms for E = a + lambda R(bE), F = R(a) + lambda R(bF)", ("exact",), check_atkinson_ef, 9),
        CheckSpec("atkinson-factorization", "X (1 + theta lambda a) Y = exp(alpha) exp(beta)", ("exact", "float"), check_atkinson_factorization, 10),
        CheckSpec("ivp-theorem-rb0", "X' = XB, X(0) = exp(alpha) solved by exp(alpha + int W)", ("float",), check_ivp_rb0, 11),
        CheckSpec("findiff", "discrete calculus and exp(-A_0)exp(A_N) = prod (1 + B_k)", ("exact", "float"), check_findiff, 12),
        CheckSpec("harness-determinism", "identical (config, seed) give identical reports", ("exact", "float"), None, 13),
        CheckSpec("dismag", "truncation sweep of the B_k operator series", ("float",), check_dismag),
        CheckSpec("t-product", "time-ordered product sorts by ascending time", ("exact", "float"), check_t_product),
        CheckSpec("r-center", "sampled membership in the R-center", ("exact",), check_r_center),
    )
}
