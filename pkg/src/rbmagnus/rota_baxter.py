"""Rota-Baxter operators of weight theta.

An operator R of weight theta satisfies

    R(x) R(y) = R(R(x) y + x R(y)) + theta R(x y).

Operators are callables.  Applied to a :class:`~rbmagnus.series.Series` they
act coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import LaurentSeries, MatrixOver, PolyMatrix, SeqFn, as_exact
from .errors import CarrierError, TruncationError
from .series import Series


class RBOperator:
    """Base class; subclasses set ``weight`` and implement ``_apply``."""

    carrier: tuple = ()
    weight: Fraction

    def __call__(self, x):
        if isinstance(x, Series):
            return x.map(self)
        self.require(x)
        return self._apply(x)

    def require(self, x) -> None:
        if not isinstance(x, self.carrier):
            raise CarrierError(f"{self.kind} acts on {self.carrier_name}, got {type(x).__name__}")

    @property
    def carrier_name(self) -> str:
        return "/".join(c.__name__ for c in self.carrier)

    @property
    def kind(self) -> str:
        return type(self).__name__

    def tilde(self) -> "RBOperator":
        return TildeRB(self)

    def params(self) -> dict:
        return {"kind": self.kind, "weight": str(self.weight)}

    def _apply(self, x):  # pragma: no cover - abstract
        raise NotImplementedError


@dataclass(frozen=True, eq=False)
class IntegralRB(RBOperator):
    """Weight-zero integration from 0 to t on polynomial matrices."""

    carrier = (PolyMatrix,)
    weight: Fraction = field(default=Fraction(0), init=False)

    def _apply(self, x: PolyMatrix) -> PolyMatrix:
        return x.integrate()


@dataclass(frozen=True, eq=False)
class FiniteSumRB(RBOperator):
    """Riemann sum R(f)(n) = step * sum_{k<n} f(k); weight equals the step."""

    step: Fraction = Fraction(1)
    carrier = (SeqFn,)

    def __post_init__(self):
        object.__setattr__(self, "step", as_exact(self.step) if not isinstance(self.step, float) else self.step)

    @property
    def weight(self):
        return self.step

    def _apply(self, x: SeqFn) -> SeqFn:
        partial = np.cumsum(x.data, axis=0)
        out = np.concatenate([x.data[:1] * 0, partial[:-1]])
        return SeqFn._new(out) * self.step

    def params(self):
        return {"kind": self.kind, "weight": str(self.weight), "step": str(self.step)}


@dataclass(frozen=True, eq=False)
class SummationRB(RBOperator):
    """S(f)(x) = sum_{n>0} f(x + n) on sequences supported below ``horizon``; weight 1."""

    horizon: int = 16
    carrier = (SeqFn,)
    weight: Fraction = field(default=Fraction(1), init=False)

    def _apply(self, x: SeqFn) -> SeqFn:
        if x.length > self.horizon and np.any(x.data[self.horizon :] != 0):
            raise TruncationError(f"sequence is supported at or beyond the horizon {self.horizon}")
        data = x.data[: self.horizon]
        tail = np.cumsum(data[::-1], axis=0)[::-1]
        out = np.concatenate([tail[1:], data[:1] * 0])
        if x.length > self.horizon:
            out = np.concatenate([out, x.data[self.horizon :] * 0])
        return SeqFn._new(out)

    def params(self):
        return {"kind": self.kind, "weight": "1", "horizon": self.horizon}


@dataclass(frozen=True, eq=False)
class MinSubRB(RBOperator):
    """Keep the pole part of a Laurent series; an idempotent of weight -1."""

    carrier = (LaurentSeries,)
    weight: Fraction = field(default=Fraction(-1), init=False)

    def _apply(self, x: LaurentSeries) -> LaurentSeries:
        return x.pole_part()


@dataclass(frozen=True, eq=False)
class MatrixLiftRB(RBOperator):
    """Entrywise action of ``inner`` on matrices over the inner carrier."""

    inner: RBOperator = field(default_factory=MinSubRB)
    carrier = (MatrixOver,)

    @property
    def weight(self):
        return self.inner.weight

    def require(self, x):
        super().require(x)
        if not issubclass(x.entry_type, self.inner.carrier):
            raise CarrierError(f"entries must lie in {self.inner.carrier_name}")

    def _apply(self, x: MatrixOver) -> MatrixOver:
        return x.map_entries(self.inner)

    def params(self):
        return {"kind": self.kind, "weight": str(self.weight), "inner": self.inner.params()}


@dataclass(frozen=True, eq=False)
class TildeRB(RBOperator):
    """The companion -theta id - R, again of weight theta."""

    base: RBOperator = field(default_factory=IntegralRB)

    @property
    def carrier(self):
        return self.base.carrier

    @property
    def weight(self):
        return self.base.weight

    def require(self, x):
        self.base.require(x)

    def _apply(self, x):
        return x * (-self.weight) - self.base(x)

    def tilde(self) -> RBOperator:
        return self.base

    def params(self):
        return {"kind": self.kind, "weight": str(self.weight), "base": self.base.params()}


def apply_rb(R: RBOperator, a):
    return R(a)


def tilde(R: RBOperator) -> RBOperator:
    return R.tilde()


def check_rb_axiom(R: RBOperator, x, y):
    """R(x)R(y) - R(R(x)y + xR(y)) - theta R(xy); zero for a Rota-Baxter map."""
    rx, ry = R(x), R(y)
    return rx * ry - R(rx * y + x * ry) - R(x * y) * R.weight


def r_center_residual(R: RBOperator, x, a):
    """Largest of |x R(a) - R(x a)| and |R(a) x - R(a x)|."""
    ra = R(a)
    return max((x * ra - R(x * a)).norm(), (ra * x - R(a * x)).norm())


def r_center_test(R: RBOperator, x, samples, tol: float = 1e-12):
    """Sample-based membership test for the R-center.

    Returns ``(passed, max_residual)``; exact elements must give residual 0.
    """
    R.require(x)
    worst = Fraction(0) if x.exact else 0.0
    for a in samples:
        worst = max(worst, r_center_residual(R, x, a))
    passed = worst == 0 if x.exact else worst <= tol
    return passed, worst
