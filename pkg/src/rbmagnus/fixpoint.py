"""Order-by-order solvers for linear fixpoint equations over a Rota-Baxter
operator, the commutative Spitzer identity, the closed forms for the
equations E = a + lambda R(bE), F = R(a) + lambda R(bF), and the factorization
of 1 + theta lambda a into the solutions of an R-sided and an Rt-sided
equation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import LaurentSeries, MatrixOver, PolyMatrix, SeqFn
from .errors import CarrierError, PreconditionError
from .lie import commutator, element_exp
from .rota_baxter import RBOperator, TildeRB, r_center_test
from .series import Series, series_exp

FORMS = ("plain", "alpha", "alpha-tilde", "E", "F")


@dataclass(frozen=True)
class FixpointProblem:
    """One of the linear equations solved by :func:`picard_solve`.

    plain        Y = 1 + lambda R(Y a)
    alpha        X = exp(alpha) + lambda R(X a)
    alpha-tilde  Y = exp(beta) + lambda Rt(a Y)
    E            E = a + lambda R(b E)
    F            F = R(a) + lambda R(b F)

    ``alpha`` doubles as beta for the alpha-tilde form.
    """

    R: RBOperator
    form: str
    a: object
    order: int
    alpha: object = None
    b: object = None

    def __post_init__(self):
        if self.form not in FORMS:
            raise ValueError(f"unknown form {self.form!r}; expected one of {FORMS}")
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if self.form in ("E", "F") and self.b is None:
            raise PreconditionError(f"form {self.form} needs b")
        if self.form in ("alpha", "alpha-tilde") and self.alpha is None:
            raise PreconditionError(f"form {self.form} needs alpha")


def _solve(const: Series, step, order: int) -> Series:
    """Fixpoint of S = const + lambda step(S); order k settles after k sweeps."""
    s = const
    for _ in range(order):
        s = const + step(s).shift(1)
    return s


def picard_solve(p: FixpointProblem) -> Series:
    R, a, N = p.R, p.a, p.order
    R.require(a)
    if p.form == "plain":
        return _solve(Series.constant(a.one(), N), lambda s: R(s * a), N)
    if p.form == "alpha":
        return _solve(Series.constant(element_exp(p.alpha), N), lambda s: R(s * a), N)
    if p.form == "alpha-tilde":
        Rt = TildeRB(R)
        return _solve(Series.constant(element_exp(p.alpha), N), lambda s: Rt(a * s), N)
    R.require(p.b)
    if p.form == "E":
        return _solve(Series.constant(a, N), lambda s: R(p.b * s), N)
    return _solve(Series.constant(R(a), N), lambda s: R(p.b * s), N)


def fixpoint_residual(p: FixpointProblem, s: Series) -> Series:
    """Left side minus right side of the defining equation, evaluated at ``s``."""
    R, a, N = p.R, p.a, p.order
    if p.form == "plain":
        return s - Series.constant(a.one(), N) - R(s * a).shift(1)
    if p.form == "alpha":
        return s - Series.constant(element_exp(p.alpha), N) - R(s * a).shift(1)
    if p.form == "alpha-tilde":
        return s - Series.constant(element_exp(p.alpha), N) - TildeRB(R)(a * s).shift(1)
    if p.form == "E":
        return s - Series.constant(a, N) - R(p.b * s).shift(1)
    return s - Series.constant(R(a), N) - R(p.b * s).shift(1)


def nested_expansion(R: RBOperator, a, order: int) -> Series:
    """1 + sum_n lambda^n R(R(...R(R(a)a)...)a), the n-fold nested application."""
    coeffs = [a.one()]
    for _ in range(order):
        coeffs.append(R(coeffs[-1] * a))
    return Series(coeffs)


def _is_commutative(a) -> bool:
    if isinstance(a, LaurentSeries):
        return True
    if isinstance(a, (SeqFn, PolyMatrix)):
        return a.dim == 1
    if isinstance(a, MatrixOver):
        return a.dim == 1
    return False


def _log_one_plus(a, theta, order: int) -> Series:
    """log(1 + theta lambda a) / theta = sum_k (-1)^(k+1) theta^(k-1) lambda^k a^k / k.

    The right side is polynomial in theta, so theta = 0 gives lambda a.
    """
    coeffs = [a.zero()]
    pw = a.one()
    for k in range(1, order + 1):
        pw = pw * a
        coeffs.append(pw * (Fraction((-1) ** (k + 1), k) * Fraction(theta) ** (k - 1)))
    return Series(coeffs)


def spitzer_exponent(R: RBOperator, a, order: int) -> Series:
    """R(log(1 + theta lambda a) / theta), the exponent of the commutative solution."""
    return R(_log_one_plus(a, R.weight, order))


def spitzer_check(R: RBOperator, a, order: int, *, flipped: bool = False) -> Series:
    """Picard solution of Y = 1 + lambda R(Y a) minus exp(R(log(1 + theta lambda a)/theta)).

    Zero for a commutative carrier.  ``flipped=True`` uses theta -> -theta in
    the exponent instead, i.e. exp(-R(log(1 - theta lambda a)/theta)); that
    form does not solve the equation under this sign convention for the
    Rota-Baxter relation unless theta = 0.
    """
    R.require(a)
    if not _is_commutative(a):
        raise CarrierError("the Spitzer identity needs a commutative carrier (1x1 or scalar Laurent)")
    if not a.exact:
        raise PreconditionError("spitzer_check runs in exact arithmetic")
    theta = -R.weight if flipped else R.weight
    rhs = series_exp(R(_log_one_plus(a, theta, order)))
    lhs = picard_solve(FixpointProblem(R, "plain", a, order))
    return lhs - rhs


@dataclass(frozen=True)
class AtkinsonEF:
    E: Series
    F: Series
    X: Series
    Y: Series
    E_residual: Series
    F_residual: Series
    E_direct: Series
    F_direct: Series


def atkinson_ef(R: RBOperator, a, b, order: int) -> AtkinsonEF:
    """Closed forms for E = a + lambda R(bE) and F = R(a) + lambda R(bF).

    With X = 1 + lambda R(bX) and Y = 1 + lambda Rt(Yb):

        F = X R(Y a),    E = a + lambda X R(Y b a).

    The residuals compare these with the direct Picard solutions.
    """
    R.require(a)
    R.require(b)
    N = order
    one = Series.constant(a.one(), N)
    Rt = TildeRB(R)
    X = _solve(one, lambda s: R(b * s), N)
    Y = _solve(one, lambda s: Rt(s * b), N)
    F = X * R(Y * a)
    E = Series.constant(a, N) + (X * R(Y * (b * a))).shift(1)
    E_direct = picard_solve(FixpointProblem(R, "E", a, N, b=b))
    F_direct = picard_solve(FixpointProblem(R, "F", a, N, b=b))
    return AtkinsonEF(E, F, X, Y, E - E_direct, F - F_direct, E_direct, F_direct)


def _commute(x, y) -> bool:
    c = commutator(x, y)
    if x.exact:
        return c.is_zero()
    return float(c.norm()) <= 1e-14 * max(1.0, float(x.norm()) * float(y.norm()))


@dataclass(frozen=True)
class AtkinsonFactorization:
    X: Series
    Y: Series
    exp_gamma: object
    gamma: object
    residual: Series
    unit_form_residual: Series
    chain: tuple


def atkinson_factorize(
    R: RBOperator,
    a,
    order: int,
    alpha=None,
    beta=None,
    *,
    samples=None,
    center_tol: float = 1e-12,
) -> AtkinsonFactorization:
    """Solve X = exp(alpha) + lambda R(X a), Y = exp(beta) + lambda Rt(a Y).

    Returns ``residual = X (1 + theta lambda a) Y - exp(alpha) exp(beta)``,
    which vanishes for every weight, and ``unit_form_residual = X (1 - lambda
    a) Y - exp(alpha) exp(beta)``, which coincides with it at theta = -1 only.
    ``chain`` holds the residuals of the intermediate identities

        XY = e^a e^b + lambda R(Xa) e^b + lambda e^a Rt(aY) + lambda^2 R(Xa) Rt(aY)
           = e^a e^b + lambda R(X a e^b) + lambda Rt(e^a a Y) + lambda^2 R(Xa) Rt(aY)
           = e^a e^b + lambda (R + Rt)(X a Y)
           = e^a e^b - theta lambda X a Y.

    ``gamma`` is alpha + beta when the two commute and None otherwise.
    """
    R.require(a)
    N = order
    alpha = a.zero() if alpha is None else alpha
    beta = a.zero() if beta is None else beta
    if samples is not None:
        for name, x in (("alpha", alpha), ("beta", beta)):
            ok, worst = r_center_test(R, x, samples, center_tol)
            if not ok:
                raise PreconditionError(f"{name} fails the R-center test (residual {worst})")
    Rt = TildeRB(R)
    theta = R.weight
    ea, eb = element_exp(alpha), element_exp(beta)
    X = picard_solve(FixpointProblem(R, "alpha", a, N, alpha=alpha))
    Y = picard_solve(FixpointProblem(R, "alpha-tilde", a, N, alpha=beta))
    eg = ea * eb
    EG = Series.constant(eg, N)
    one = Series.constant(a.one(), N)
    lam_a = Series.monomial(a, 1, N) if N >= 1 else Series.constant(a.zero(), N)
    residual = X * (one + lam_a * theta) * Y - EG
    unit_form = X * (one - lam_a) * Y - EG

    XY = X * Y
    RXa, RtaY = R(X * a), Rt(a * Y)
    cross = (RXa * RtaY).shift(2)
    line1 = EG + (RXa * eb).shift(1) + (ea * RtaY).shift(1) + cross
    line2 = EG + R(X * (a * eb)).shift(1) + Rt((ea * a) * Y).shift(1) + cross
    XaY = X * a * Y
    line3 = EG + (R(XaY) + Rt(XaY)).shift(1)
    line4 = EG - XaY.shift(1) * theta
    chain = tuple(XY - line for line in (line1, line2, line3, line4))
    gamma = alpha + beta if _commute(alpha, beta) else None
    return AtkinsonFactorization(X, Y, eg, gamma, residual, unit_form, chain)
