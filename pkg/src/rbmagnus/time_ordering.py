"""Time-ordered products and exponentials, the map Phi relating
Texp(A_t - A_0) to a time-ordered exponential, and the T*-exponential.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np
from numpy.polynomial.legendre import leggauss

from .algebra import Matrix, PolyMatrix
from .errors import TieError
from .lie import ad_power, mat_exp, sandwich_sum
from .rota_baxter import IntegralRB
from .series import Series


@dataclass(frozen=True)
class TimedOperator:
    time: object
    value: object


def t_product(ops) -> object:
    """Product of the operators sorted by ascending time (earliest on the left)."""
    ops = list(ops)
    if not ops:
        raise ValueError("empty time-ordered product")
    ordered = sorted(ops, key=lambda op: op.time)
    for a, b in zip(ordered, ordered[1:]):
        if a.time == b.time:
            raise TieError(f"two operators share time {a.time!r}")
    out = ordered[0].value
    for op in ordered[1:]:
        out = out * op.value
    return out


def t_ordered_exp_exact(A: PolyMatrix, order: int) -> Series:
    """Dyson series 1 + sum_n lambda^n int_{0<s_1<...<s_n<t} A(s_1)...A(s_n)."""
    R = IntegralRB()
    coeffs = [A.one()]
    for _ in range(order):
        coeffs.append(R(coeffs[-1] * A))
    return Series(coeffs)


def _as_float_callable(A):
    if isinstance(A, PolyMatrix):
        coeffs = A.to_float() if A.exact else A

        def many(ts):
            return coeffs.eval_many(ts)

        return many
    return lambda ts: np.stack([np.asarray(A(float(s)).data, dtype=float) for s in ts])


def t_ordered_exp_float(A, t: float, steps: int) -> Matrix:
    """Solve Y' = Y A(s), Y(0) = 1 on [0, t] by classical fourth-order Runge-Kutta.

    ``A`` is a PolyMatrix or a callable returning a Matrix.  Global error is
    O(steps**-4).
    """
    if steps < 1:
        raise ValueError("steps must be positive")
    h = float(t) / steps
    nodes = np.arange(2 * steps + 1) * (h / 2)
    values = _as_float_callable(A)(nodes)
    y = np.eye(values.shape[1])
    for i in range(steps):
        a0, am, a1 = values[2 * i], values[2 * i + 1], values[2 * i + 2]
        k1 = y @ a0
        k2 = (y + (h / 2) * k1) @ am
        k3 = (y + (h / 2) * k2) @ am
        k4 = (y + h * k3) @ a1
        y = y + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4)
    return Matrix(y, exact=False)


def phi_map(A: PolyMatrix, terms: int = 20) -> PolyMatrix:
    """Phi(A') = sum_{i=1..terms} (-1)^(i-1)/i! ad_A^(i-1)(A')."""
    if terms < 1:
        raise ValueError("at least one term is needed")
    dA = A.derive()
    out = dA.zero()
    inner = dA
    for i in range(1, terms + 1):
        if i > 1:
            inner = ad_power(A, inner, 1)
        out = out + inner * ((-1) ** (i - 1) * _inv_factorial(i, A.exact))
    return out


def phi_map_double_sum(A: PolyMatrix, terms: int = 20) -> PolyMatrix:
    """Phi(A') = sum_n 1/n! sum_m (-1)^m C(n-1, m) A^m A' A^(n-1-m)."""
    dA = A.derive()
    out = dA.zero()
    for n in range(1, terms + 1):
        out = out + sandwich_sum(A, dA, A, n - 1) * _inv_factorial(n, A.exact)
    return out


def _inv_factorial(n: int, exact: bool):
    return Fraction(1, factorial(n)) if exact else 1.0 / factorial(n)


def t_square_of_increment(A: PolyMatrix) -> PolyMatrix:
    """T[(A_t - A_0)^2] = A_0 A_0 - 2 A_0 A_t + A_t A_t (for t > 0)."""
    a0 = PolyMatrix.constant(A.coefficient(0))
    at = A
    # time labels 0 and 1 stand for the instants 0 < t
    cross = t_product([TimedOperator(1, at), TimedOperator(0, a0)])
    return a0 * a0 - cross * 2 + at * at


def paradox_defect(A: PolyMatrix) -> PolyMatrix:
    """T[(A_t - A_0)^2] - T[(int_0^t A'(u) du)^2].

    The second T-square is twice the strictly iterated integral of A' against
    itself; the difference equals int_0^t [A'(u), A(u)] du.
    """
    iterated = t_ordered_exp_exact(A.derive(), 2)[2]
    return t_square_of_increment(A) - iterated * 2


def paradox_defect_expected(A: PolyMatrix) -> PolyMatrix:
    dA = A.derive()
    return IntegralRB()(dA * A - A * dA)


def tstar_exp(A, t) -> Matrix:
    """T*exp(int_0^t A'(u) du) = exp(-A(0)) exp(A(t))."""
    a0 = A(0.0) if not isinstance(A, PolyMatrix) else A.to_float().eval(0.0)
    at = A(float(t)) if not isinstance(A, PolyMatrix) else A.to_float().eval(float(t))
    return mat_exp(-a0) * mat_exp(at)


def gauss_legendre_unit(nodes: int):
    """Nodes and weights of Gauss-Legendre quadrature on [0, 1]."""
    x, w = leggauss(nodes)
    return (x + 1) / 2, w / 2


def duhamel_residual(A: PolyMatrix, u: float, h: float = 1e-4, nodes: int = 32) -> Matrix:
    """exp(-A(u)) d/du exp(A(u)) minus int_0^1 exp(-v A(u)) A'(u) exp(v A(u)) dv.

    The derivative is a central difference with step ``h``; the integral uses
    Gauss-Legendre quadrature.
    """
    Af = A.to_float() if A.exact else A
    au = Af.eval(u)
    lhs = mat_exp(-au) * (mat_exp(Af.eval(u + h)) - mat_exp(Af.eval(u - h))) / (2 * h)
    dau = Af.derive().eval(u)
    xs, ws = gauss_legendre_unit(nodes)
    rhs = np.zeros_like(np.asarray(au.data, dtype=float))
    for x, w in zip(xs, ws):
        rhs += w * (mat_exp(au * (-x)) * dau * mat_exp(au * x)).data
    return lhs - Matrix(rhs, exact=False)
