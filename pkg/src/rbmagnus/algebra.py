"""Base algebras: dense matrices, polynomial matrices, matrix sequences,
Laurent series and matrices with entries in a commutative carrier.

Every element is immutable and works in one of two arithmetic modes:
exact (entries are :class:`fractions.Fraction`) or float (``float64``).
Mixing the two raises :class:`~rbmagnus.errors.ModeError`.

The algebra product is ``*``; multiplying by a Python number is scalar
multiplication.  ``one()`` and ``zero()`` build the unit and the zero of the
same shape and mode.
"""

from __future__ import annotations

import numbers
import operator
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CarrierError,
    DegreeOverflowError,
    DimensionError,
    ModeError,
    NotInvertibleError,
    PrecisionError,
    UnsupportedModeError,
)

__all__ = [
    "Matrix",
    "PolyMatrix",
    "SeqFn",
    "LaurentSeries",
    "MatrixOver",
    "is_scalar",
    "as_exact",
]


def is_scalar(x) -> bool:
    return isinstance(x, numbers.Number) and not isinstance(x, (bool, complex))


def _is_float_scalar(x) -> bool:
    return isinstance(x, (float, np.floating))


def as_exact(x) -> Fraction:
    if _is_float_scalar(x):
        raise ModeError(f"float scalar {x!r} in exact mode")
    return Fraction(x)


def _coerce_scalar(s, exact: bool):
    if exact:
        return as_exact(s)
    return float(s)


def _entries(values, exact: bool | None) -> np.ndarray:
    """Build a frozen entry array; ``exact=None`` infers the mode."""
    if isinstance(values, np.ndarray) and values.dtype != object:
        if exact is None:
            exact = bool(np.issubdtype(values.dtype, np.integer))
        if exact:
            if np.issubdtype(values.dtype, np.integer):
                arr = np.vectorize(Fraction, otypes=[object])(values)
            else:
                raise ModeError("float array given in exact mode")
        else:
            arr = values.astype(float)
    else:
        arr = np.array(values, dtype=object)
        flat = arr.ravel()
        has_float = any(_is_float_scalar(v) for v in flat)
        if exact is None:
            exact = not has_float
        if exact:
            if has_float:
                raise ModeError("float entry given in exact mode")
            arr = np.array([Fraction(v) for v in flat], dtype=object).reshape(arr.shape)
        else:
            arr = arr.astype(float)
    arr.setflags(write=False)
    return arr


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


class _ArrayElement:
    """Shared arithmetic for elements stored as a numpy array of entries."""

    __slots__ = ("data",)

    def __init__(self, data: np.ndarray):
        self.data = data

    @classmethod
    def _new(cls, data: np.ndarray):
        obj = cls.__new__(cls)
        obj.data = _freeze(data)
        return obj

    @property
    def exact(self) -> bool:
        return self.data.dtype == object

    @property
    def dim(self) -> int:
        return self.data.shape[-1]

    def _check(self, other) -> None:
        if type(other) is not type(self):
            raise CarrierError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if self.exact != other.exact:
            raise ModeError("exact and float operands mixed")
        if self.dim != other.dim:
            raise DimensionError(f"dimension {self.dim} vs {other.dim}")

    def _combine(self, other, op):
        return self._new(op(self.data, other.data))

    def __add__(self, other):
        if not isinstance(other, _ArrayElement):
            return NotImplemented
        self._check(other)
        return self._combine(other, operator.add)

    def __sub__(self, other):
        if not isinstance(other, _ArrayElement):
            return NotImplemented
        self._check(other)
        return self._combine(other, operator.sub)

    def __neg__(self):
        return self._new(-self.data)

    def __mul__(self, other):
        if is_scalar(other):
            return self._new(self.data * _coerce_scalar(other, self.exact))
        if isinstance(other, _ArrayElement):
            self._check(other)
            return self._product(other)
        return NotImplemented

    def __rmul__(self, other):
        if is_scalar(other):
            return self._new(self.data * _coerce_scalar(other, self.exact))
        return NotImplemented

    def __truediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        inv = 1 / as_exact(other) if self.exact else 1.0 / float(other)
        return self._new(self.data * inv)

    def __eq__(self, other):
        if type(other) is not type(self) or other.exact != self.exact:
            return False
        return self.data.shape == other.data.shape and bool(np.all(self.data == other.data))

    __hash__ = None

    def is_zero(self) -> bool:
        return not bool(np.any(self.data != 0))

    def norm(self):
        """Largest absolute entry (a Fraction in exact mode)."""
        if self.data.size == 0:
            return Fraction(0) if self.exact else 0.0
        if self.exact:
            return max(abs(v) for v in self.data.ravel())
        return float(np.max(np.abs(self.data)))

    def zero(self):
        return self._new(self.data * (Fraction(0) if self.exact else 0.0))

    def to_float(self):
        return self._new(self.data.astype(float))

    def _product(self, other):  # pragma: no cover - abstract
        raise NotImplementedError


def _eye(n: int, exact: bool) -> np.ndarray:
    if exact:
        e = np.full((n, n), Fraction(0), dtype=object)
        for i in range(n):
            e[i, i] = Fraction(1)
        return e
    return np.eye(n)


class Matrix(_ArrayElement):
    """Dense square matrix."""

    __slots__ = ()

    def __init__(self, rows, exact: bool | None = None):
        data = _entries(rows, exact)
        if data.ndim != 2 or data.shape[0] != data.shape[1] or data.shape[0] == 0:
            raise DimensionError(f"matrix must be square and non-empty, got shape {data.shape}")
        self.data = data

    @classmethod
    def identity(cls, n: int, exact: bool = True) -> "Matrix":
        return cls._new(_eye(n, exact))

    @classmethod
    def zeros(cls, n: int, exact: bool = True) -> "Matrix":
        return cls._new(_eye(n, exact) * 0)

    @classmethod
    def elementary(cls, n: int, i: int, j: int, exact: bool = True) -> "Matrix":
        """E_ij with a single one at row i, column j (1-based)."""
        data = _eye(n, exact) * 0
        data[i - 1, j - 1] = Fraction(1) if exact else 1.0
        return cls._new(data)

    @classmethod
    def diag(cls, values: Sequence, exact: bool | None = None) -> "Matrix":
        n = len(values)
        rows = [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        return cls(rows, exact)

    def _product(self, other):
        return self._new(self.data @ other.data)

    def one(self) -> "Matrix":
        return Matrix.identity(self.dim, self.exact)

    def __getitem__(self, ij):
        return self.data[ij]

    def tolist(self):
        return self.data.tolist()

    def inverse(self) -> "Matrix":
        if not self.exact:
            if abs(np.linalg.det(self.data)) < 1e-300:
                raise NotInvertibleError("singular matrix")
            return Matrix._new(np.linalg.inv(self.data))
        n = self.dim
        aug = [list(self.data[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if pivot is None:
                raise NotInvertibleError("singular matrix")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            p = aug[col][col]
            aug[col] = [v / p for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return Matrix([row[n:] for row in aug], exact=True)

    def det(self):
        if not self.exact:
            return float(np.linalg.det(self.data))
        rows = [list(r) for r in self.data]
        n, det = self.dim, Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                rows[col], rows[pivot] = rows[pivot], rows[col]
                det = -det
            det *= rows[col][col]
            for r in range(col + 1, n):
                f = rows[r][col] / rows[col][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
        return det

    def __repr__(self):
        rows = "; ".join(" ".join(str(v) for v in row) for row in self.data)
        return f"Matrix([{rows}]{'' if self.exact else ', float'})"


class PolyMatrix(_ArrayElement):
    """Matrix with polynomial entries in t; ``data[k]`` is the coefficient of t**k.

    Degrees grow as needed up to ``max_degree``; beyond that a
    :class:`DegreeOverflowError` is raised.
    """

    __slots__ = ()
    max_degree = 64

    def __init__(self, coeffs, exact: bool | None = None):
        if isinstance(coeffs, np.ndarray):
            data = _entries(coeffs, exact)
        else:
            coeffs = list(coeffs)
            if not coeffs:
                raise DimensionError("need at least one coefficient")
            if all(isinstance(c, Matrix) for c in coeffs):
                modes = {c.exact for c in coeffs}
                if len(modes) > 1:
                    raise ModeError("coefficients mix exact and float")
                data = np.stack([c.data for c in coeffs])
                if exact is not None and exact != modes.pop():
                    raise ModeError("coefficient mode differs from requested mode")
            else:
                data = _entries(coeffs, exact)
        if data.ndim != 3 or data.shape[1] != data.shape[2]:
            raise DimensionError(f"bad coefficient array shape {data.shape}")
        self.data = _freeze(self._trim(data))
        if self.degree > self.max_degree:
            raise DegreeOverflowError(f"degree {self.degree} exceeds cap {self.max_degree}")

    @staticmethod
    def _trim(data: np.ndarray) -> np.ndarray:
        k = data.shape[0]
        while k > 1 and not np.any(data[k - 1] != 0):
            k -= 1
        return data[:k] if k < data.shape[0] else data

    @classmethod
    def _new(cls, data):
        obj = cls.__new__(cls)
        obj.data = _freeze(cls._trim(data))
        return obj

    @classmethod
    def constant(cls, m: Matrix) -> "PolyMatrix":
        return cls._new(m.data[None].copy())

    @classmethod
    def monomial(cls, m: Matrix, k: int) -> "PolyMatrix":
        data = np.stack([m.data * 0] * k + [m.data])
        return cls._new(data)

    @property
    def degree(self) -> int:
        return self.data.shape[0] - 1

    def coefficient(self, k: int) -> Matrix:
        if k > self.degree:
            return Matrix._new(self.data[0] * 0)
        return Matrix._new(self.data[k].copy())

    def one(self) -> "PolyMatrix":
        return PolyMatrix._new(_eye(self.dim, self.exact)[None])

    def zero(self) -> "PolyMatrix":
        return PolyMatrix._new(self.data[:1] * 0)

    def _combine(self, other, op):
        a, b = self.data, other.data
        if a.shape[0] < b.shape[0]:
            a = np.concatenate([a, b[: b.shape[0] - a.shape[0]] * 0])
        elif b.shape[0] < a.shape[0]:
            b = np.concatenate([b, a[: a.shape[0] - b.shape[0]] * 0])
        return self._new(op(a, b))

    def _product(self, other):
        d1, d2 = self.degree, other.degree
        if d1 + d2 > self.max_degree:
            raise DegreeOverflowError(f"product degree {d1 + d2} exceeds cap {self.max_degree}")
        pairs = self.data[:, None] @ other.data[None, :]
        out = np.zeros((d1 + d2 + 1, self.dim, self.dim), dtype=self.data.dtype)
        if self.exact:
            out[...] = Fraction(0)
        for i in range(d1 + 1):
            out[i : i + d2 + 1] += pairs[i]
        return self._new(out)

    def __call__(self, t0):
        return self.eval(t0)

    def eval(self, t0) -> Matrix:
        t0 = _coerce_scalar(t0, self.exact)
        acc = self.data[-1]
        for k in range(self.degree - 1, -1, -1):
            acc = acc * t0 + self.data[k]
        return Matrix._new(np.array(acc, dtype=self.data.dtype))

    def eval_many(self, ts: np.ndarray) -> np.ndarray:
        """Float evaluation at many points; returns shape (len(ts), n, n)."""
        powers = np.asarray(ts, dtype=float)[:, None] ** np.arange(self.degree + 1)
        return np.tensordot(powers, self.data.astype(float), axes=1)

    def derive(self) -> "PolyMatrix":
        if self.degree == 0:
            return self.zero()
        k = np.arange(1, self.degree + 1)
        if self.exact:
            k = np.array([Fraction(int(v)) for v in k], dtype=object)
        return self._new(self.data[1:] * k[:, None, None])

    def integrate(self) -> "PolyMatrix":
        """Antiderivative vanishing at t = 0."""
        if self.degree + 1 > self.max_degree:
            raise DegreeOverflowError(f"integral degree {self.degree + 1} exceeds cap {self.max_degree}")
        if self.exact:
            k = np.array([Fraction(1, int(v)) for v in range(1, self.degree + 2)], dtype=object)
        else:
            k = 1.0 / np.arange(1, self.degree + 2)
        body = self.data * k[:, None, None]
        return self._new(np.concatenate([self.data[:1] * 0, body]))

    def inverse(self) -> "PolyMatrix":
        if self.degree != 0:
            raise NotInvertibleError("only constant polynomial matrices are inverted")
        return PolyMatrix.constant(self.coefficient(0).inverse())

    def __repr__(self):
        return f"PolyMatrix(dim={self.dim}, degree={self.degree}{'' if self.exact else ', float'})"


class SeqFn(_ArrayElement):
    """Matrix-valued sequence f(0..L-1) with pointwise operations."""

    __slots__ = ()

    def __init__(self, values, exact: bool | None = None):
        values = list(values) if not isinstance(values, np.ndarray) else values
        if isinstance(values, list) and values and all(isinstance(v, Matrix) for v in values):
            if len({v.exact for v in values}) > 1:
                raise ModeError("sequence mixes exact and float values")
            data = np.stack([v.data for v in values])
        else:
            data = _entries(values, exact)
        if data.ndim != 3 or data.shape[1] != data.shape[2] or data.shape[0] == 0:
            raise DimensionError(f"bad sequence array shape {data.shape}")
        self.data = _freeze(data)

    @classmethod
    def scalars(cls, values: Iterable, exact: bool | None = None) -> "SeqFn":
        return cls([[[v]] for v in values], exact)

    @classmethod
    def constant(cls, m: Matrix, length: int) -> "SeqFn":
        return cls._new(np.stack([m.data] * length))

    @property
    def length(self) -> int:
        return self.data.shape[0]

    def __len__(self):
        return self.length

    def __getitem__(self, k: int) -> Matrix:
        return Matrix._new(self.data[k].copy())

    def _check(self, other):
        super()._check(other)
        if self.length != other.length:
            raise DimensionError(f"sequence length {self.length} vs {other.length}")

    def _product(self, other):
        return self._new(self.data @ other.data)

    def one(self) -> "SeqFn":
        return SeqFn._new(np.stack([_eye(self.dim, self.exact)] * self.length))

    def inverse(self) -> "SeqFn":
        return SeqFn([self[k].inverse() for k in range(self.length)])

    def __repr__(self):
        return f"SeqFn(length={self.length}, dim={self.dim}{'' if self.exact else ', float'})"


class LaurentSeries:
    """Scalar Laurent series with finite pole part.

    ``coeffs[i]`` is the coefficient of eps**(low + i).  ``prec`` is the
    highest exponent whose coefficient is known; ``None`` means the series is
    an exact Laurent polynomial.  Products lose precision by the valuation of
    the other factor, so truncation stays consistent in the presence of poles.
    """

    __slots__ = ("low", "coeffs", "prec", "_exact")
    max_pole = 32
    max_degree = 64

    def __init__(self, coeffs: Sequence, low: int = 0, prec: int | None = None, exact: bool | None = None):
        arr = _entries(list(coeffs), exact) if len(coeffs) else np.zeros(0, dtype=object)
        vals = list(arr)
        if len(coeffs) and exact is None:
            exact = arr.dtype == object
        self._set(vals, low, prec, True if exact is None else exact)

    def _set(self, vals, low, prec, exact):
        if prec is not None and low + len(vals) - 1 > prec:
            vals = vals[: max(0, prec - low + 1)]
        start = 0
        while start < len(vals) and vals[start] == 0:
            start += 1
        end = len(vals)
        while end > start and vals[end - 1] == 0:
            end -= 1
        vals = vals[start:end]
        low = low + start if vals else 0
        if not exact:
            vals = [float(v) for v in vals]
        self.low, self.coeffs, self.prec = low, tuple(vals), prec
        self._exact = exact
        if vals and -low > self.max_pole:
            raise PrecisionError(f"pole order {-low} exceeds capacity {self.max_pole}")
        if vals and prec is None and low + len(vals) - 1 > self.max_degree:
            raise DegreeOverflowError(f"Laurent degree exceeds cap {self.max_degree}")
        if prec is not None and prec < -self.max_pole:
            raise PrecisionError("no known coefficients left")

    @classmethod
    def _make(cls, vals, low, prec, exact):
        obj = cls.__new__(cls)
        obj._set(list(vals), low, prec, exact)
        return obj

    @classmethod
    def from_dict(cls, terms: dict, prec: int | None = None, exact: bool | None = None) -> "LaurentSeries":
        if not terms:
            return cls([], 0, prec, exact)
        lo, hi = min(terms), max(terms)
        return cls([terms.get(k, 0) for k in range(lo, hi + 1)], lo, prec, exact)

    @property
    def exact(self) -> bool:
        return self._exact

    @property
    def pole_order(self) -> int:
        return max(0, -self.low) if self.coeffs else 0

    @property
    def truncation_order(self):
        return self.prec

    @property
    def valuation(self):
        if self.coeffs:
            return self.low
        return None if self.prec is None else self.prec + 1

    def coefficient(self, k: int):
        if self.prec is not None and k > self.prec:
            raise PrecisionError(f"coefficient of eps^{k} is beyond precision {self.prec}")
        i = k - self.low
        zero = Fraction(0) if self._exact else 0.0
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else zero

    def terms(self) -> dict:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c != 0}

    def _check(self, other):
        if not isinstance(other, LaurentSeries):
            raise CarrierError(f"cannot combine LaurentSeries with {type(other).__name__}")
        if self._exact != other._exact:
            raise ModeError("exact and float operands mixed")

    def _addsub(self, other, sign):
        self._check(other)
        precs = [p for p in (self.prec, other.prec) if p is not None]
        prec = min(precs) if precs else None
        a, b = self.terms(), other.terms()
        out = {k: a.get(k, 0) + sign * b.get(k, 0) for k in set(a) | set(b)}
        if prec is not None:
            out = {k: v for k, v in out.items() if k <= prec}
        return LaurentSeries._from_terms(out, prec, self._exact)

    @classmethod
    def _from_terms(cls, out, prec, exact):
        out = {k: v for k, v in out.items() if v != 0}
        if not out:
            return cls._make([], 0, prec, exact)
        lo, hi = min(out), max(out)
        return cls._make([out.get(k, 0) for k in range(lo, hi + 1)], lo, prec, exact)

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self._addsub(other, 1)

    def __sub__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self._addsub(other, -1)

    def __neg__(self):
        return LaurentSeries._make([-c for c in self.coeffs], self.low, self.prec, self._exact)

    def __mul__(self, other):
        if is_scalar(other):
            s = _coerce_scalar(other, self._exact)
            return LaurentSeries._make([c * s for c in self.coeffs], self.low, self.prec, self._exact)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        self._check(other)
        inf = float("inf")
        p1 = inf if self.prec is None else self.prec
        p2 = inf if other.prec is None else other.prec
        v1 = inf if self.valuation is None else self.valuation
        v2 = inf if other.valuation is None else other.valuation
        prec = min(p1 + v2, p2 + v1)
        prec = None if prec == inf else int(prec)
        out: dict = {}
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                k = self.low + i + other.low + j
                if prec is None or k <= prec:
                    out[k] = out.get(k, 0) + a * b
        return LaurentSeries._from_terms(out, prec, self._exact)

    def __rmul__(self, other):
        if is_scalar(other):
            return self.__mul__(other)
        return NotImplemented

    def __truediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        inv = 1 / as_exact(other) if self._exact else 1.0 / float(other)
        return self * inv

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries) or other._exact != self._exact:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.coeffs

    def norm(self):
        if not self.coeffs:
            return Fraction(0) if self._exact else 0.0
        return max(abs(c) for c in self.coeffs)

    def zero(self) -> "LaurentSeries":
        return LaurentSeries._make([], 0, None, self._exact)

    def one(self) -> "LaurentSeries":
        return LaurentSeries._make([1], 0, None, self._exact)

    def pole_part(self) -> "LaurentSeries":
        if self.prec is not None and self.prec < -1:
            raise PrecisionError("pole part not fully known")
        return LaurentSeries._from_terms({k: v for k, v in self.terms().items() if k < 0}, None, self._exact)

    def regular_part(self) -> "LaurentSeries":
        return LaurentSeries._from_terms({k: v for k, v in self.terms().items() if k >= 0}, self.prec, self._exact)

    def __repr__(self):
        body = " + ".join(f"{c}*eps^{self.low + i}" for i, c in enumerate(self.coeffs) if c != 0) or "0"
        tail = "" if self.prec is None else f" + O(eps^{self.prec + 1})"
        return f"LaurentSeries({body}{tail})"


class MatrixOver:
    """Square matrix whose entries lie in a commutative carrier algebra
    (for instance :class:`LaurentSeries`)."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        rows = tuple(tuple(r) for r in entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionError("MatrixOver must be square and non-empty")
        kinds = {type(e) for r in rows for e in r}
        if len(kinds) != 1:
            raise CarrierError("entries must come from a single carrier")
        self.entries = rows

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def entry_type(self) -> type:
        return type(self.entries[0][0])

    @property
    def exact(self) -> bool:
        return self.entries[0][0].exact

    def _check(self, other):
        if not isinstance(other, MatrixOver) or other.entry_type is not self.entry_type:
            raise CarrierError("MatrixOver operands must share an entry carrier")
        if other.dim != self.dim:
            raise DimensionError(f"dimension {self.dim} vs {other.dim}")

    def map_entries(self, f) -> "MatrixOver":
        return MatrixOver([[f(e) for e in row] for row in self.entries])

    def __add__(self, other):
        if not isinstance(other, MatrixOver):
            return NotImplemented
        self._check(other)
        return MatrixOver([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if not isinstance(other, MatrixOver):
            return NotImplemented
        self._check(other)
        return MatrixOver([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __neg__(self):
        return self.map_entries(operator.neg)

    def __mul__(self, other):
        if is_scalar(other):
            return self.map_entries(lambda e: e * other)
        if not isinstance(other, MatrixOver):
            return NotImplemented
        self._check(other)
        n = self.dim
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self.entries[i][0] * other.entries[0][j]
                for k in range(1, n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return MatrixOver(out)

    def __rmul__(self, other):
        if is_scalar(other):
            return self.map_entries(lambda e: e * other)
        return NotImplemented

    def __truediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return self.map_entries(lambda e: e / other)

    def __eq__(self, other):
        if not isinstance(other, MatrixOver) or other.dim != self.dim:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.entries for e in r)

    def norm(self):
        return max(e.norm() for r in self.entries for e in r)

    def zero(self) -> "MatrixOver":
        z = self.entries[0][0].zero()
        return MatrixOver([[z] * self.dim for _ in range(self.dim)])

    def one(self) -> "MatrixOver":
        z, u = self.entries[0][0].zero(), self.entries[0][0].one()
        return MatrixOver([[u if i == j else z for j in range(self.dim)] for i in range(self.dim)])

    @classmethod
    def from_scalars(cls, rows, like) -> "MatrixOver":
        """Constant-entry matrix: each scalar c becomes c * like.one()."""
        u = like.one()
        return cls([[u * v for v in row] for row in rows])

    def __repr__(self):
        return f"MatrixOver(dim={self.dim}, entries={self.entry_type.__name__})"


def check_mode(*elements) -> bool:
    """Return the common mode of the elements, raising on a mix."""
    modes = {e.exact for e in elements}
    if len(modes) > 1:
        raise ModeError("exact and float operands mixed")
    return modes.pop()


def require_float(x, what: str) -> None:
    if x.exact:
        raise UnsupportedModeError(f"{what} is only available in float mode")
