"""Bernoulli numbers and the Magnus-type recursions.

Every variant solves a fixpoint equation of the form

    W = sum_m (-1)^m B_m / m!  D_W^m (lambda a)

by Picard iteration in the lambda grading, where the twisted adjoint is

    D_W(b) = [alpha + R(W), b] - theta b W.

With R the integral, alpha = 0 this is the classical Magnus recursion for the
derivative of Omega; alpha != 0 absorbs an initial value exp(alpha); a general
Rota-Baxter R of weight theta gives the noncommutative Spitzer-type exponent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import Matrix, PolyMatrix
from .errors import ConvergenceError, PreconditionError
from .lie import commutator, left_mul, mat_exp, power, right_mul
from .rota_baxter import IntegralRB, RBOperator, TildeRB, r_center_test
from .series import Series, series_exp, series_exp_shifted

_BERNOULLI = [Fraction(1)]

# Bernoulli terms kept when alpha makes the adjoint series infinite (float mode).
DEFAULT_AD_TERMS = 40


def bernoulli(n: int) -> Fraction:
    """B_n with the convention B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be non-negative")
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        acc = sum(math.comb(m + 1, k) * _BERNOULLI[k] for k in range(m))
        _BERNOULLI.append(-acc / (m + 1))
    return _BERNOULLI[n]


def bernoulli_weights(count: int) -> list:
    """(-1)^m B_m / m! for m < count: the Taylor coefficients of -z/(exp(-z) - 1)."""
    return [(-1) ** m * bernoulli(m) / math.factorial(m) for m in range(count)]


@dataclass(frozen=True)
class MagnusExpansion:
    """Result of a Magnus-type recursion.

    ``generator`` is the series W solving the recursion (the derivative of
    Omega in the integral case) and ``exponent`` is R(W), so the solution of the
    associated fixpoint equation is exp(alpha + exponent).
    """

    variant: str
    generator: Series
    exponent: Series
    alpha: object = None
    operator: RBOperator | None = None
    ad_terms: int = 0

    @property
    def order(self) -> int:
        return self.generator.order

    @property
    def terms(self) -> tuple:
        """Omega_1 .. Omega_N, the graded pieces of the exponent."""
        return self.exponent.coeffs[1:]

    def exp_series(self) -> Series:
        if self.alpha is None or self.alpha.is_zero():
            return series_exp(self.exponent)
        return series_exp_shifted(self.alpha, self.exponent)


def twisted_ad(R: RBOperator, alpha, w: Series):
    """b -> [alpha + R(w), b] - theta b w, acting on series."""
    shift = R(w)
    if alpha is not None:
        shift = Series.constant(alpha, w.order) + shift
    theta = R.weight

    def op(b: Series) -> Series:
        out = commutator(shift, b)
        if theta != 0:
            out = out - (b * w) * theta
        return out

    return op


def _ad_series(R, alpha, w: Series, seed: Series, max_terms: int, tol: float):
    """sum_m weight_m D_w^m(seed), stopping once the iterates vanish."""
    op = twisted_ad(R, alpha, w)
    weights = bernoulli_weights(max_terms + 1)
    total = seed * weights[0]
    v = seed
    for m in range(1, max_terms + 1):
        v = op(v)
        if v.is_zero():
            return total, m
        if weights[m] != 0:
            total = total + v * weights[m]
    if seed.exact:
        raise ConvergenceError(
            "adjoint series does not terminate in exact arithmetic",
            {"terms": max_terms, "last_norm": str(v.norm())},
        )
    last = float(v.norm()) * float(abs(weights[max_terms - 1] or weights[max_terms - 2]))
    if last > tol * max(1.0, float(total.norm())):
        raise ConvergenceError(
            "adjoint series did not converge at the requested truncation",
            {"terms": max_terms, "last_weighted_norm": last},
        )
    return total, max_terms


def _picard(R: RBOperator, alpha, a, order: int, max_terms: int, tol: float):
    """Graded Picard iteration; iteration j fixes the lambda^(j+1) coefficient."""
    zero = Series.constant(a.zero(), order)
    if order == 0:
        return zero, 0
    w = zero
    used = 0
    for j in range(order):
        k = min(j + 1, order)
        seed = Series.monomial(a, 1, k)
        w_k, m = _ad_series(R, alpha, w.truncate(k), seed, max_terms, tol)
        used = max(used, m)
        w = w_k.truncate(order)
    return w, used


def rb_magnus(R: RBOperator, a, order: int) -> MagnusExpansion:
    """Exponent W with exp(R(W)) solving Y = 1 + lambda R(Y a)."""
    R.require(a)
    w, used = _picard(R, None, a, order, max(order, 1) + 1, 0.0)
    return MagnusExpansion("rb", w, R(w), None, R, used)


def rb_magnus_alpha(
    R: RBOperator,
    alpha,
    a,
    order: int,
    *,
    samples=None,
    ad_terms: int = DEFAULT_AD_TERMS,
    tol: float = 1e-15,
    center_tol: float = 1e-12,
) -> MagnusExpansion:
    """Exponent W with exp(alpha + R(W)) solving X = exp(alpha) + lambda R(X a).

    ``alpha`` must lie in the R-center; ``samples`` (carrier elements) are used
    to test this before iterating.
    """
    R.require(a)
    R.require(alpha)
    if samples is not None:
        ok, worst = r_center_test(R, alpha, samples, center_tol)
        if not ok:
            raise PreconditionError(f"alpha fails the R-center test (residual {worst})")
    if alpha.is_zero():
        w, used = _picard(R, None, a, order, max(order, 1) + 1, tol)
    else:
        w, used = _picard(R, alpha, a, order, ad_terms, tol)
    return MagnusExpansion("rb-alpha", w, R(w), alpha, R, used)


def magnus_classical(A: PolyMatrix, order: int) -> MagnusExpansion:
    """Classical Magnus expansion; ``terms`` are Omega_n(t), ``generator`` their derivatives."""
    R = IntegralRB()
    w, used = _picard(R, None, A, order, max(order, 1) + 1, 0.0)
    return MagnusExpansion("classical", w, R(w), None, R, used)


def magnus_alpha(alpha: Matrix, B: PolyMatrix, order: int, *, ad_terms: int = DEFAULT_AD_TERMS) -> MagnusExpansion:
    """Magnus expansion with initial value: X' = X B, X(0) = exp(alpha)."""
    if alpha.exact != B.exact:
        raise PreconditionError("alpha and B must share an arithmetic mode")
    R = IntegralRB()
    alpha_t = PolyMatrix.constant(alpha)
    exp = rb_magnus_alpha(R, alpha_t, B, order, ad_terms=ad_terms)
    return MagnusExpansion("alpha", exp.generator, exp.exponent, alpha_t, R, exp.ad_terms)


def evaluate_solution(expansion: MagnusExpansion, t, lam=1.0) -> Matrix:
    """exp(alpha + sum_n lam^n Omega_n(t)) for an integral-type expansion (float)."""
    total = np.zeros((expansion.generator[0].dim,) * 2)
    if expansion.alpha is not None:
        total = total + np.asarray(expansion.alpha.coefficient(0).data, dtype=float)
    for n, omega in enumerate(expansion.terms, start=1):
        total = total + (lam**n) * np.asarray(omega.to_float().eval(float(t)).data, dtype=float)
    return mat_exp(Matrix(total, exact=False))


def newmagnus_identity_residuals(R: RBOperator, alpha, beta, n_max: int = 5) -> list:
    """Per-n residuals of the identity behind exp(alpha + R(W)) solving X = exp(alpha) + lambda R(X a):

        ((alpha + R(b))^n - alpha^n) / n!
            = 1/n! sum_{p+q=n-1} R((alpha + R(b))^p b (alpha - Rt(b))^q)

    with Rt = -theta id - R and alpha in the R-center.
    """
    rb = R(beta)
    rt = TildeRB(R)(beta)
    left_base = alpha + rb
    right_base = alpha - rt
    out = []
    for n in range(1, n_max + 1):
        lhs = (power(left_base, n) - power(alpha, n)) / math.factorial(n)
        acc = None
        for p in range(n):
            term = R(power(left_base, p) * beta * power(right_base, n - 1 - p))
            acc = term if acc is None else acc + term
        out.append(lhs - acc / math.factorial(n))
    return out


def ad_decomposition_residual(x, b, c):
    """Residuals of ad_x = l_x - r_x and of l_x r_c = r_c l_x, evaluated on b."""
    split = commutator(x, b) - (left_mul(x)(b) - right_mul(x)(b))
    commute = left_mul(x)(right_mul(c)(b)) - right_mul(c)(left_mul(x)(b))
    return split, commute
