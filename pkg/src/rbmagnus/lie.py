"""Commutators, iterated adjoints, multiplication operators and the matrix
exponential.

These helpers only use ``+``, ``-`` and ``*``, so they apply equally to plain
algebra elements and to truncated series of them.
"""

from __future__ import annotations

import math
from math import comb

import numpy as np

from .algebra import LaurentSeries, Matrix, MatrixOver, PolyMatrix, SeqFn
from .errors import UnsupportedModeError


def commutator(a, b):
    return a * b - b * a


def ad_power(a, b, m: int):
    """ad_a^m(b) = [a, [a, ... [a, b]]] with m brackets."""
    if m < 0:
        raise ValueError("m must be non-negative")
    out = b
    for _ in range(m):
        out = commutator(a, out)
    return out


def power(a, k: int):
    if k == 0:
        return a.one()
    out = a
    for _ in range(k - 1):
        out = out * a
    return out


def ad_power_binomial(a, b, m: int):
    """Closed form sum_n (-1)^n C(m, n) a^(m-n) b a^n of ad_a^m(b)."""
    pows = [power(a, k) for k in range(m + 1)]
    out = b.zero()
    for n in range(m + 1):
        out = out + (pows[m - n] * b * pows[n]) * ((-1) ** n * comb(m, n))
    return out


def sandwich_sum(left, b, right, m: int):
    """sum_n (-1)^n C(m, n) left^n b right^(m-n).

    With ``left = right = a`` this equals (r_a - l_a)^m(b) = (-ad_a)^m(b).
    """
    lp = [power(left, k) for k in range(m + 1)]
    rp = [power(right, k) for k in range(m + 1)]
    out = b.zero()
    for n in range(m + 1):
        out = out + (lp[n] * b * rp[m - n]) * ((-1) ** n * comb(m, n))
    return out


def left_mul(a):
    """l_a: b -> a b."""
    return lambda b: a * b


def right_mul(a):
    """r_a: b -> b a."""
    return lambda b: b * a


# exp(X) for ||X||_1 <= 1/2 via Taylor degree 18 has truncation below 1e-22.
_TAYLOR_DEGREE = 18
_SCALE_TARGET = 0.5


def mat_exp(a: Matrix) -> Matrix:
    """Matrix exponential by scaling and squaring around a Taylor core."""
    if a.exact:
        raise UnsupportedModeError("mat_exp needs float mode; exp is transcendental over the rationals")
    x = np.asarray(a.data, dtype=float)
    n = x.shape[0]
    norm = np.linalg.norm(x, 1)
    s = 0 if norm <= _SCALE_TARGET else int(math.ceil(math.log2(norm / _SCALE_TARGET)))
    x = x / (2.0**s)
    eye = np.eye(n)
    acc = eye.copy()
    for k in range(_TAYLOR_DEGREE, 0, -1):
        acc = eye + (x @ acc) / k
    for _ in range(s):
        acc = acc @ acc
    return Matrix._new(acc)


def _exact_nilpotent_exp(x):
    n = x.dim
    top = power(x, n)
    if not top.is_zero():
        raise UnsupportedModeError("exact exponential needs a nilpotent argument")
    out, term = x.one(), x.one()
    for k in range(1, n):
        term = term * x / k
        out = out + term
    return out


def element_exp(x):
    """exp of a carrier element: mat_exp in float mode, finite sum for exact nilpotents."""
    if isinstance(x, LaurentSeries):
        if x.is_zero():
            return x.one()
        raise UnsupportedModeError("exp of a non-zero Laurent series is not representable")
    if x.exact:
        return _exact_nilpotent_exp(x)
    if isinstance(x, Matrix):
        return mat_exp(x)
    if isinstance(x, PolyMatrix):
        if x.degree != 0:
            raise UnsupportedModeError("float exp of a time-dependent polynomial matrix")
        return PolyMatrix.constant(mat_exp(x.coefficient(0)))
    if isinstance(x, SeqFn):
        return SeqFn([mat_exp(x[k]) for k in range(x.length)])
    if isinstance(x, MatrixOver):
        raise UnsupportedModeError("float exp over a MatrixOver carrier")
    raise TypeError(f"no exponential for {type(x).__name__}")


def element_inverse(x):
    if isinstance(x, (Matrix, PolyMatrix, SeqFn)):
        return x.inverse()
    if isinstance(x, LaurentSeries):
        if x.terms() == {0: 1}:
            return x
        raise UnsupportedModeError("only the unit Laurent series is inverted")
    if isinstance(x, MatrixOver) and x == x.one():
        return x
    raise UnsupportedModeError(f"no inverse available for {type(x).__name__}")

