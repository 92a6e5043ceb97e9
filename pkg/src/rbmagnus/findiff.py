"""Discrete calculus on matrix sequences.

The difference operator, the weight-one partial-sum operator, the discrete
initial value problem X_{n+1} = X_n (1 + B_n), and the operator series that
turns an exponential parametrization X_n = exp(A_n) into the factors B_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from .algebra import Matrix, SeqFn
from .errors import DimensionError, NotInvertibleError
from .lie import mat_exp, sandwich_sum
from .rota_baxter import FiniteSumRB
from .time_ordering import gauss_legendre_unit

DEFAULT_SWEEP = (5, 10, 20, 30)
# Residuals below this are treated as roundoff when checking monotone decay.
ROUNDOFF_FLOOR = 1e-14


def _slice(f: SeqFn, start: int, stop: int | None = None) -> SeqFn:
    return SeqFn._new(f.data[start:stop])


def delta(f: SeqFn) -> SeqFn:
    """(Delta f)(n) = f(n+1) - f(n); one entry shorter than f."""
    if f.length < 2:
        raise DimensionError("delta needs a sequence of length at least 2")
    return SeqFn._new(f.data[1:] - f.data[:-1])


def rsum(f: SeqFn) -> SeqFn:
    """R(f)(n) = sum_{k<n} f(k)."""
    return FiniteSumRB()(f)


def leibniz_residual(f: SeqFn, g: SeqFn) -> SeqFn:
    """Delta(fg) - (f Delta g + (Delta f) g + (Delta f)(Delta g))."""
    df, dg = delta(f), delta(g)
    f0, g0 = _slice(f, 0, -1), _slice(g, 0, -1)
    return delta(f * g) - (f0 * dg + df * g0 + df * dg)


def telescoping_residual(f: SeqFn) -> SeqFn:
    """R(Delta f)(m) - (f(m) - f(0)) for m = 0 .. len(f) - 2."""
    head = _slice(f, 0, -1)
    return rsum(delta(f)) - (head - SeqFn.constant(f[0], head.length))


@dataclass(frozen=True)
class DiscreteIVP:
    """X_{n+1} = X_n (1 + B_n) for n = 0 .. len(B) - 1, starting from X0."""

    B: SeqFn
    X0: Matrix

    def __post_init__(self):
        if self.B.dim != self.X0.dim:
            raise DimensionError("B and X0 must have the same matrix size")


def _check_invertible(m: Matrix, index: int) -> None:
    if m.exact:
        if m.det() == 0:
            raise NotInvertibleError(f"1 + B_{index} is singular", index)
        return
    arr = np.asarray(m.data, dtype=float)
    if not np.all(np.isfinite(arr)) or np.linalg.cond(arr) > 1e14:
        raise NotInvertibleError(f"1 + B_{index} is numerically singular", index)


def solve_findif(p: DiscreteIVP) -> SeqFn:
    """X_0 .. X_N by the recursion X_{k+1} = X_k (1 + B_k)."""
    one = p.X0.one()
    xs = [p.X0]
    for k in range(p.B.length):
        factor = one + p.B[k]
        _check_invertible(factor, k)
        xs.append(xs[-1] * factor)
    return SeqFn(xs)


def product_form(p: DiscreteIVP) -> SeqFn:
    """X_n = X0 (1 + B_0) ... (1 + B_{n-1}), each prefix multiplied afresh."""
    one = p.X0.one()
    xs = []
    for n in range(p.B.length + 1):
        acc = p.X0
        for k in range(n):
            acc = acc * (one + p.B[k])
        xs.append(acc)
    return SeqFn(xs)


def sum_form_residual(p: DiscreteIVP, X: SeqFn) -> SeqFn:
    """X_n - (X0 + sum_{k<n} X_k B_k) for n = 0 .. N."""
    XB = _slice(X, 0, -1) * p.B
    partial = rsum(SeqFn._new(np.concatenate([XB.data, XB.data[:1] * 0])))
    return X - (SeqFn.constant(p.X0, X.length) + partial)


def _weight(n: int, exact: bool):
    """(-1)^(n-1) / n!"""
    w = Fraction((-1) ** (n - 1), factorial(n))
    return w if exact else float(w)


def bk_from_ak(A_k: Matrix, A_next: Matrix, terms: int = 30, *, method: str = "operator") -> Matrix:
    """B_k = sum_{N=1..terms} (-1)^(N-1)/N! (l_{A_k} - r_{A_next})^(N-1) (A_next - A_k).

    ``method="operator"`` iterates v -> A_k v - v A_next; ``method="binomial"``
    expands each power as sum_n (-1)^(N-1-n) C(N-1, n) A_k^n dA A_next^(N-1-n).
    """
    if terms < 1:
        raise ValueError("at least one term is needed")
    dA = A_next - A_k
    out = dA.zero()
    if method == "operator":
        v = dA
        for n in range(1, terms + 1):
            if n > 1:
                v = A_k * v - v * A_next
            out = out + v * _weight(n, dA.exact)
        return out
    if method == "binomial":
        for n in range(1, terms + 1):
            m = n - 1
            # sandwich_sum carries (-1)^i on the left power; (-1)^m restores the sign of (l - r)^m
            v = sandwich_sum(A_k, dA, A_next, m) * (-1) ** m
            out = out + v * _weight(n, dA.exact)
        return out
    raise ValueError(f"unknown method {method!r}")


def bk_closed_form(A_k: Matrix, A_next: Matrix) -> Matrix:
    """exp(-A_k) exp(A_next) - 1."""
    return mat_exp(-A_k) * mat_exp(A_next) - A_k.one()


def discrete_duhamel_residual(A: SeqFn, k: int, nodes: int = 32) -> Matrix:
    """exp(-A_k) Delta[exp(A)]_k minus int_0^1 exp(-v A_k) (Delta A)_k exp(v A_{k+1}) dv."""
    a0, a1 = A[k], A[k + 1]
    lhs = mat_exp(-a0) * (mat_exp(a1) - mat_exp(a0))
    dA = a1 - a0
    xs, ws = gauss_legendre_unit(nodes)
    rhs = np.zeros((A.dim, A.dim))
    for x, w in zip(xs, ws):
        rhs += w * (mat_exp(a0 * (-x)) * dA * mat_exp(a1 * x)).data
    return lhs - Matrix(rhs, exact=False)


def step_identity_residual(A: SeqFn, k: int) -> Matrix:
    """1 + exp(-A_k) Delta[exp(A)]_k - exp(-A_k) exp(A_{k+1})."""
    a0, a1 = A[k], A[k + 1]
    e0inv = mat_exp(-a0)
    return a0.one() + e0inv * (mat_exp(a1) - mat_exp(a0)) - e0inv * mat_exp(a1)


def bk_sequence(A: SeqFn, terms: int = 30) -> SeqFn:
    return SeqFn([bk_from_ak(A[k], A[k + 1], terms) for k in range(A.length - 1)])


def dismag_residual(A: SeqFn, terms: int = 30) -> Matrix:
    """exp(-A_0) exp(A_N) minus the ordered product of (1 + B_k), B_k from the series."""
    B = bk_sequence(A, terms)
    one = A[0].one()
    prod = solve_findif(DiscreteIVP(B, one))[A.length - 1]
    return mat_exp(-A[0]) * mat_exp(A[A.length - 1]) - prod


def prefix_residuals(A: SeqFn, terms: int = 30) -> list:
    """Residual of exp(-A_0) exp(A_n) against the first n factors, for every n."""
    B = bk_sequence(A, terms)
    X = solve_findif(DiscreteIVP(B, A[0].one()))
    e0inv = mat_exp(-A[0])
    return [float((e0inv * mat_exp(A[n]) - X[n]).norm()) for n in range(A.length)]


def dismag_sweep(A: SeqFn, sweep=DEFAULT_SWEEP) -> list:
    """(terms, residual norm) for each truncation in ``sweep``."""
    return [(m, float(dismag_residual(A, m).norm())) for m in sweep]


def is_monotone_decrease(values, floor: float = ROUNDOFF_FLOOR) -> bool:
    """Each value is below its predecessor, or both sit under the roundoff floor."""
    return all(b < a or (a <= floor and b <= floor) for a, b in zip(values, values[1:]))
