from fractions import Fraction
from math import factorial

import numpy as np
import pytest
import sympy as sp
from hypothesis import given

from conftest import exact_matrices, poly_matrices, sequences
from rbmagnus import sampling as rs
from rbmagnus.algebra import LaurentSeries, Matrix, PolyMatrix, SeqFn
from rbmagnus.errors import ConvergenceError, PreconditionError
from rbmagnus.fixpoint import FixpointProblem, picard_solve
from rbmagnus.lie import commutator, mat_exp
from rbmagnus.magnus import (
    ad_decomposition_residual,
    bernoulli,
    bernoulli_weights,
    evaluate_solution,
    magnus_alpha,
    magnus_classical,
    newmagnus_identity_residuals,
    rb_magnus,
    rb_magnus_alpha,
)
from rbmagnus.rota_baxter import FiniteSumRB, IntegralRB, MatrixLiftRB, MinSubRB
from rbmagnus.series import Series, series_exp, series_exp_shifted
from rbmagnus.time_ordering import t_ordered_exp_exact, t_ordered_exp_float

E12 = Matrix.elementary(2, 1, 2)
E21 = Matrix.elementary(2, 2, 1)
I2 = Matrix.identity(2)
A_STD = PolyMatrix([E12, E21])


# -- Bernoulli numbers


def test_bernoulli_first_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(3) == 0


@pytest.mark.parametrize("n", [0] + list(range(2, 31)))
def test_bernoulli_matches_sympy(n):
    # sympy's B_1 convention differs, so n = 1 is covered above
    b = sp.bernoulli(n)
    assert bernoulli(n) == Fraction(int(b.p), int(b.q))


def test_odd_bernoulli_vanish():
    assert all(bernoulli(2 * k + 1) == 0 for k in range(1, 15))


def test_bernoulli_rejects_negative():
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_generating_identity():
    # (sum_n (-1)^n B_n/n! z^n) (exp(-z) - 1) = -z, compared up to z^K
    K = 14
    w = bernoulli_weights(K + 1)
    e = [Fraction((-1) ** k, factorial(k)) for k in range(K + 2)]
    e[0] -= 1
    prod = [sum(w[i] * e[n - i] for i in range(n + 1)) for n in range(K + 1)]
    assert prod == [Fraction(0), Fraction(-1)] + [Fraction(0)] * (K - 1)


# -- classical Magnus


def test_classical_first_term_is_integral():
    m = magnus_classical(A_STD, 3)
    assert m.terms[0] == IntegralRB()(A_STD)


def test_classical_commuting_case():
    A = PolyMatrix([I2, I2 * 3])
    m = magnus_classical(A, 5)
    assert m.terms[0] == IntegralRB()(A)
    assert all(t.is_zero() for t in m.terms[1:])


def test_classical_second_term():
    R = IntegralRB()
    m = magnus_classical(A_STD, 3)
    assert m.generator[2] == commutator(R(A_STD), A_STD) / 2
    assert m.terms[1] == R(commutator(R(A_STD), A_STD)) / 2


@given(poly_matrices(2, 1))
def test_classical_third_term(A):
    R = IntegralRB()
    IA = R(A)
    quarter = commutator(R(commutator(IA, A)), A) / 4
    twelfth = commutator(IA, commutator(IA, A)) / 12
    assert magnus_classical(A, 3).generator[3] == quarter + twelfth


@given(poly_matrices(2, 1))
def test_classical_exponential_is_dyson(A):
    assert magnus_classical(A, 4).exp_series() == t_ordered_exp_exact(A, 4)


def test_classical_exponential_against_float_integration():
    m = magnus_classical(A_STD, 8)
    got = evaluate_solution(m, 0.5)
    ref = t_ordered_exp_float(A_STD.to_float(), 0.5, 2000)
    assert float((got - ref).norm()) <= 1e-7


# -- initial value variant


def test_alpha_zero_reduces_to_classical():
    m = magnus_alpha(Matrix.zeros(2), A_STD, 4)
    assert m.exponent == magnus_classical(A_STD, 4).exponent


def test_zero_generator_keeps_initial_value():
    alpha = Matrix([[0.1, 0.2], [0.0, -0.3]])
    m = magnus_alpha(alpha, PolyMatrix.constant(alpha * 0.0), 3)
    assert np.allclose(evaluate_solution(m, 1.0).data, mat_exp(alpha).data, atol=1e-15)


def test_alpha_nilpotent_example():
    alpha = Matrix.elementary(2, 1, 2, exact=False)
    B = PolyMatrix([Matrix.elementary(2, 2, 1, exact=False)])
    m = magnus_alpha(alpha, B, 16)
    ref = mat_exp(alpha) * t_ordered_exp_float(B, 1.0, 10_000)
    assert float((evaluate_solution(m, 1.0) - ref).norm()) <= 1e-7


def test_alpha_mode_mismatch():
    with pytest.raises(PreconditionError):
        magnus_alpha(Matrix([[0.5]]), PolyMatrix([Matrix([[1]])]), 2)


def test_alpha_exact_non_terminating_is_reported():
    # ad_alpha(E12) = E12 for alpha = E11, so the adjoint series never stops
    alpha = PolyMatrix.constant(Matrix.elementary(2, 1, 1))
    with pytest.raises(ConvergenceError):
        rb_magnus_alpha(IntegralRB(), alpha, PolyMatrix.constant(E12), 2, ad_terms=5)


# -- Rota-Baxter Magnus


def test_rb_magnus_commutative_weight_zero():
    a = PolyMatrix([Matrix([[2]]), Matrix([[1]])])
    m = rb_magnus(IntegralRB(), a, 5)
    assert m.generator == Series.monomial(a, 1, 5)
    assert m.exp_series() == series_exp(IntegralRB()(Series.monomial(a, 1, 5)))


def test_rb_magnus_weight_one_scalar_constant():
    R = FiniteSumRB()
    a = SeqFn.scalars([Fraction(1, 2)] * 8)
    m = rb_magnus(R, a, 5)
    assert m.exp_series() == picard_solve(FixpointProblem(R, "plain", a, 5))


@given(sequences(2, 5))
def test_rb_magnus_second_term(a):
    R = FiniteSumRB(Fraction(2))
    m = rb_magnus(R, a, 3)
    assert m.generator[2] == (commutator(R(a), a) - a * a * R.weight) / 2


@given(sequences(2, 5))
def test_rb_magnus_reconstructs_picard_finite_sum(a):
    for R in (FiniteSumRB(), FiniteSumRB(Fraction(-1, 2))):
        m = rb_magnus(R, a, 4)
        assert m.exp_series() == picard_solve(FixpointProblem(R, "plain", a, 4))


def test_rb_magnus_matrix_lift():
    rng = rs.rng_for(2, "lift")
    a = rs.laurent_matrix(rng, 2, 1, 1)
    R = MatrixLiftRB(MinSubRB())
    m = rb_magnus(R, a, 3)
    assert m.exp_series() == picard_solve(FixpointProblem(R, "plain", a, 3))


def test_rb_magnus_alpha_zero_coincides():
    R = FiniteSumRB()
    a = rs.sequence(rs.rng_for(4, "z"), 2, 5, True)
    assert rb_magnus_alpha(R, a.zero(), a, 4).generator == rb_magnus(R, a, 4).generator


def test_rb_magnus_alpha_zero_input():
    R = IntegralRB()
    alpha = PolyMatrix.constant(Matrix([[0.0, 0.4], [-0.1, 0.2]]))
    m = rb_magnus_alpha(R, alpha, alpha.zero(), 3)
    assert m.generator.is_zero()
    X = series_exp_shifted(alpha, m.exponent)
    assert np.allclose(X[0].coefficient(0).data, mat_exp(alpha.coefficient(0)).data, atol=1e-15)
    assert all(c.is_zero() for c in X.coeffs[1:])


def test_rb_magnus_alpha_integral_float():
    R = IntegralRB()
    alpha = PolyMatrix.constant(Matrix([[0.2, -0.5], [0.3, 0.1]]))
    a = A_STD.to_float()
    m = rb_magnus_alpha(R, alpha, a, 5, samples=[a])
    X = picard_solve(FixpointProblem(R, "alpha", a, 5, alpha=alpha))
    assert float((series_exp_shifted(alpha, m.exponent) - X).norm()) <= 1e-9


def test_rb_magnus_alpha_rejects_non_central():
    R = IntegralRB()
    t1 = PolyMatrix.monomial(Matrix.identity(2, exact=False), 1)
    a = A_STD.to_float()
    with pytest.raises(PreconditionError):
        rb_magnus_alpha(R, t1, a, 3, samples=[a])


# -- identities behind the generalized theorem


@given(exact_matrices(2), poly_matrices(2, 1))
def test_inductive_identity_integral(c, beta):
    res = newmagnus_identity_residuals(IntegralRB(), PolyMatrix.constant(c), beta, 5)
    assert all(r.is_zero() for r in res)


@given(exact_matrices(2), sequences(2, 5))
def test_inductive_identity_finite_sum(c, beta):
    for R in (FiniteSumRB(), FiniteSumRB(Fraction(-1))):
        res = newmagnus_identity_residuals(R, SeqFn.constant(c, 5), beta, 5)
        assert all(r.is_zero() for r in res)


def test_inductive_identity_fails_off_center():
    # alpha = t * 1 is not central for the integral, and the identity breaks
    alpha = PolyMatrix.monomial(I2, 1)
    beta = PolyMatrix([E12, E21])
    res = newmagnus_identity_residuals(IntegralRB(), alpha, beta, 3)
    assert any(not r.is_zero() for r in res)


@given(exact_matrices(2), exact_matrices(2), exact_matrices(2))
def test_ad_decomposition(x, b, c):
    split, commute = ad_decomposition_residual(x, b, c)
    assert split.is_zero() and commute.is_zero()


def test_laurent_scalar_magnus_is_spitzer_type():
    # commutative weight -1 carrier: W = log(1 - lambda a)/(-1) coefficientwise
    R = MinSubRB()
    a = LaurentSeries.from_dict({-1: 1, 0: 2})
    m = rb_magnus(R, a, 4)
    assert m.exp_series() == picard_solve(FixpointProblem(R, "plain", a, 4))
