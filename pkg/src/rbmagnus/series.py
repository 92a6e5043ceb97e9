"""Truncated power series in the grading parameter lambda.

Coefficients may be any algebra element from :mod:`rbmagnus.algebra`.  All
series taking part in one computation share the same truncation order N;
products drop every term above lambda**N.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import is_scalar
from .errors import ConvergenceError, DimensionError, PreconditionError, UnsupportedModeError
from .lie import element_inverse

DEFAULT_ORDER = 6


class Series:
    """c_0 + c_1 lambda + ... + c_N lambda**N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise DimensionError("a series needs at least the constant coefficient")
        kind = type(coeffs[0])
        if any(type(c) is not kind for c in coeffs):
            raise TypeError("series coefficients must come from one algebra")
        self.coeffs = coeffs

    @classmethod
    def constant(cls, c, order: int) -> "Series":
        z = c.zero()
        return cls((c,) + (z,) * order)

    @classmethod
    def monomial(cls, c, k: int, order: int) -> "Series":
        """lambda**k * c, truncated at ``order``."""
        z = c.zero()
        return cls(c if i == k else z for i in range(order + 1))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def exact(self) -> bool:
        return self.coeffs[0].exact

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def _same_order(self, other: "Series"):
        if other.order != self.order:
            raise DimensionError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._same_order(other)
        return Series(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._same_order(other)
        return Series(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return Series(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_mul(self, other)
        if is_scalar(other):
            return Series(c * other for c in self.coeffs)
        try:
            return Series(c * other for c in self.coeffs)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        if is_scalar(other):
            return Series(c * other for c in self.coeffs)
        return Series(other * c for c in self.coeffs)

    def __truediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return Series(c / other for c in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Series) and other.order == self.order and (self - other).is_zero()

    __hash__ = None

    def map(self, f) -> "Series":
        """Apply a linear map coefficient by coefficient."""
        return Series(f(c) for c in self.coeffs)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            z = self.coeffs[0].zero()
            return Series(self.coeffs + (z,) * (order - self.order))
        return Series(self.coeffs[: order + 1])

    def shift(self, k: int = 1) -> "Series":
        """Multiply by lambda**k, keeping the truncation order."""
        z = self.coeffs[0].zero()
        return Series(((z,) * k + self.coeffs)[: self.order + 1])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def norms(self) -> list:
        return [c.norm() for c in self.coeffs]

    def norm(self):
        return max(self.norms())

    def zero(self) -> "Series":
        return Series.constant(self.coeffs[0].zero(), self.order)

    def one(self) -> "Series":
        return Series.constant(self.coeffs[0].one(), self.order)

    def __repr__(self):
        return f"Series(order={self.order}, coefficients={type(self.coeffs[0]).__name__})"


def series_mul(x: Series, y: Series) -> Series:
    """Cauchy product truncated at the common order."""
    x._same_order(y)
    n = x.order
    xz = [c.is_zero() for c in x.coeffs]
    yz = [c.is_zero() for c in y.coeffs]
    out = []
    for k in range(n + 1):
        acc = None
        for i in range(k + 1):
            if xz[i] or yz[k - i]:
                continue
            term = x.coeffs[i] * y.coeffs[k - i]
            acc = term if acc is None else acc + term
        if acc is None:
            acc = (x.coeffs[0] * y.coeffs[0]).zero() if k == 0 else out[0].zero()
        out.append(acc)
    return Series(out)


def series_exp(x: Series) -> Series:
    """sum_k x**k / k! for a series without constant term."""
    if not x[0].is_zero():
        raise PreconditionError("series_exp needs a vanishing constant coefficient")
    total = x.one()
    term = x.one()
    for k in range(1, x.order + 1):
        term = term * x / k
        total = total + term
    return total


def series_log(x: Series) -> Series:
    """sum_k (-1)^(k+1) (x - 1)**k / k for a series with constant term 1."""
    one = x.one()
    u = x - one
    if not u[0].is_zero():
        raise PreconditionError("series_log needs constant coefficient equal to the unit")
    total = x.zero()
    term = one
    for k in range(1, x.order + 1):
        term = term * u
        total = total + term * Fraction((-1) ** (k + 1), k)
    return total


def series_inverse(x: Series) -> Series:
    """Two-sided inverse of a series whose constant coefficient is invertible."""
    try:
        c0inv = element_inverse(x[0])
    except (ArithmeticError, UnsupportedModeError) as err:
        raise PreconditionError(f"constant coefficient is not invertible: {err}") from err
    out = [c0inv]
    for k in range(1, x.order + 1):
        acc = x[1] * out[k - 1]
        for j in range(2, k + 1):
            acc = acc + x[j] * out[k - j]
        out.append(-(c0inv * acc))
    return Series(out)


def series_exp_shifted(alpha, w: Series, *, tol: float = 1e-18, max_terms: int = 400) -> Series:
    """exp(alpha + w) for a constant alpha and a series w without constant term.

    The exponential series is summed termwise.  In exact mode this terminates
    only for nilpotent alpha; otherwise it is summed until the terms fall below
    ``tol`` relative to the partial sum.
    """
    if not w[0].is_zero():
        raise PreconditionError("w must have a vanishing constant coefficient")
    if alpha.is_zero():
        return series_exp(w)
    z = Series.constant(alpha, w.order) + w
    total = z.one()
    term = z.one()
    if w.exact:
        cap = alpha.dim * (w.order + 2) + 2
        for k in range(1, cap + 1):
            term = term * z / k
            if term.is_zero():
                return total
            total = total + term
        raise UnsupportedModeError("exact exp(alpha + w) needs nilpotent alpha")
    quiet = 0
    for k in range(1, max_terms + 1):
        term = term * z / k
        total = total + term
        if term.norm() <= tol * max(1.0, total.norm()):
            quiet += 1
            if quiet >= 2:
                return total
        else:
            quiet = 0
    raise ConvergenceError(
        "exp(alpha + w) did not converge",
        {"terms": max_terms, "last_term_norm": term.norm()},
    )
