"""Seeded random instances for every carrier algebra.

Exact entries are p/q with p in [-3, 3] and q in {1, 2, 4}; float matrices
have uniform [-1, 1] entries rescaled so that the spectral norm is at most 1.
"""

from __future__ import annotations

import zlib
from fractions import Fraction

import numpy as np

from .algebra import LaurentSeries, Matrix, MatrixOver, PolyMatrix, SeqFn

DENOMINATORS = (1, 2, 4)


def rng_for(seed: int, label: str) -> np.random.Generator:
    """Generator keyed by (seed, label) so checks do not depend on run order."""
    return np.random.default_rng([int(seed) & 0xFFFFFFFFFFFFFFFF, zlib.crc32(label.encode())])


def rational(rng) -> Fraction:
    return Fraction(int(rng.integers(-3, 4)), int(rng.choice(DENOMINATORS)))


def exact_matrix(rng, n: int) -> Matrix:
    return Matrix([[rational(rng) for _ in range(n)] for _ in range(n)], exact=True)


def float_matrix(rng, n: int, scale: float = 1.0) -> Matrix:
    m = rng.uniform(-1.0, 1.0, (n, n))
    norm = np.linalg.norm(m, 2)
    if norm > 1.0:
        m = m / norm
    return Matrix(m * scale, exact=False)


def matrix(rng, n: int, exact: bool, scale: float = 1.0) -> Matrix:
    return exact_matrix(rng, n) if exact else float_matrix(rng, n, scale)


def poly_matrix(rng, n: int, degree: int, exact: bool, scale: float = 1.0) -> PolyMatrix:
    return PolyMatrix([matrix(rng, n, exact, scale) for _ in range(degree + 1)])


def sequence(rng, n: int, length: int, exact: bool, scale: float = 1.0) -> SeqFn:
    return SeqFn([matrix(rng, n, exact, scale) for _ in range(length)])


def scalar_sequence(rng, length: int) -> SeqFn:
    return SeqFn.scalars([rational(rng) for _ in range(length)], exact=True)


def supported_sequence(rng, n: int, length: int, support: int) -> SeqFn:
    """Exact sequence that vanishes from index ``support`` on."""
    zero = Matrix.zeros(n, exact=True)
    return SeqFn([exact_matrix(rng, n) if k < support else zero for k in range(length)])


def laurent(rng, pole_order: int, degree: int) -> LaurentSeries:
    """Exact Laurent polynomial with terms eps^-pole_order .. eps^degree."""
    return LaurentSeries.from_dict({k: rational(rng) for k in range(-pole_order, degree + 1)}, exact=True)


def laurent_matrix(rng, n: int, pole_order: int, degree: int) -> MatrixOver:
    return MatrixOver([[laurent(rng, pole_order, degree) for _ in range(n)] for _ in range(n)])
