from fractions import Fraction
from math import factorial

import numpy as np
import pytest
from hypothesis import given

from conftest import poly_matrices, sequences
from rbmagnus import sampling as rs
from rbmagnus.algebra import LaurentSeries, Matrix, PolyMatrix, SeqFn
from rbmagnus.errors import CarrierError, PreconditionError
from rbmagnus.fixpoint import (
    FORMS,
    FixpointProblem,
    atkinson_ef,
    atkinson_factorize,
    fixpoint_residual,
    nested_expansion,
    picard_solve,
    spitzer_check,
    spitzer_exponent,
)
from rbmagnus.lie import mat_exp
from rbmagnus.magnus import rb_magnus_alpha
from rbmagnus.rota_baxter import FiniteSumRB, IntegralRB, MatrixLiftRB, MinSubRB
from rbmagnus.series import Series, series_exp, series_exp_shifted

E12 = Matrix.elementary(2, 1, 2)
E21 = Matrix.elementary(2, 2, 1)
I2 = Matrix.identity(2)
A_STD = PolyMatrix([E12, E21])


# -- problem validation and the plain solver


def test_problem_validation():
    R = IntegralRB()
    with pytest.raises(ValueError):
        FixpointProblem(R, "nope", A_STD, 2)
    with pytest.raises(ValueError):
        FixpointProblem(R, "plain", A_STD, -1)
    with pytest.raises(PreconditionError):
        FixpointProblem(R, "E", A_STD, 2)
    with pytest.raises(PreconditionError):
        FixpointProblem(R, "alpha", A_STD, 2)
    assert set(FORMS) == {"plain", "alpha", "alpha-tilde", "E", "F"}


def test_plain_zero_input():
    Y = picard_solve(FixpointProblem(IntegralRB(), "plain", A_STD.zero(), 4))
    assert Y == Series.constant(A_STD.one(), 4)


def test_plain_constant_integral():
    c = Matrix([[1, 2], [0, -1]])
    a = PolyMatrix.constant(c)
    Y = picard_solve(FixpointProblem(IntegralRB(), "plain", a, 5))
    for n in range(6):
        cn = I2
        for _ in range(n):
            cn = cn * c
        assert Y[n] == PolyMatrix.monomial(cn / factorial(n), n)


def test_plain_rejects_wrong_carrier():
    with pytest.raises(CarrierError):
        picard_solve(FixpointProblem(IntegralRB(), "plain", SeqFn.scalars([1]), 2))


@given(sequences(2, 5))
def test_every_form_solves_its_equation(a):
    R = FiniteSumRB()
    b = a * a
    alpha = SeqFn.constant(E12, 5)
    for form in FORMS:
        p = FixpointProblem(R, form, a, 4, alpha=alpha, b=b)
        assert fixpoint_residual(p, picard_solve(p)).is_zero()


@given(poly_matrices(2, 1))
def test_plain_is_nested_expansion(a):
    R = IntegralRB()
    assert picard_solve(FixpointProblem(R, "plain", a, 4)) == nested_expansion(R, a, 4)


def test_alpha_form_against_magnus_side():
    R = IntegralRB()
    alpha = PolyMatrix.constant(Matrix([[0.1, 0.3], [-0.2, 0.0]]))
    a = A_STD.to_float()
    X = picard_solve(FixpointProblem(R, "alpha", a, 4, alpha=alpha))
    assert float(fixpoint_residual(FixpointProblem(R, "alpha", a, 4, alpha=alpha), X).norm()) == 0.0
    m = rb_magnus_alpha(R, alpha, a, 4)
    assert float((series_exp_shifted(alpha, m.exponent) - X).norm()) <= 1e-12


# -- commutative Spitzer identity


def test_spitzer_zero_input():
    a = SeqFn.scalars([0] * 6)
    assert spitzer_check(FiniteSumRB(), a, 4).is_zero()


def test_spitzer_constant_one():
    a = SeqFn.scalars([1] * 8)
    assert spitzer_check(FiniteSumRB(), a, 4).is_zero()


@given(sequences(1, 6))
def test_spitzer_random_scalars_any_weight(a):
    for step in (Fraction(1), Fraction(-1), Fraction(1, 3)):
        assert spitzer_check(FiniteSumRB(step), a, 6).is_zero()


def test_spitzer_on_laurent_scalars():
    a = LaurentSeries.from_dict({-1: 1, 0: Fraction(1, 2), 1: 3})
    assert spitzer_check(MinSubRB(), a, 4).is_zero()


def test_spitzer_other_sign_fails():
    # exp(-R(log(1 - theta lambda a)/theta)) does not solve Y = 1 + lambda R(Ya) here
    a = SeqFn.scalars([1] * 8)
    assert not spitzer_check(FiniteSumRB(), a, 4, flipped=True).is_zero()


def test_spitzer_weight_zero_limit():
    # at theta = 0 the exponent is R(lambda a)
    a = PolyMatrix([Matrix([[1]]), Matrix([[2]])])
    R = IntegralRB()
    assert spitzer_exponent(R, a, 4) == R(Series.monomial(a, 1, 4))
    assert spitzer_check(R, a, 5).is_zero()


def test_spitzer_exponent_coefficients():
    # R(log(1 + lambda a)) for constant a = 1: lambda^k (-1)^(k+1)/k R(1)
    a = SeqFn.scalars([1] * 5)
    R = FiniteSumRB()
    e = spitzer_exponent(R, a, 3)
    for k in range(1, 4):
        assert e[k] == R(a) * Fraction((-1) ** (k + 1), k)


def test_spitzer_rejects_noncommutative_and_float():
    with pytest.raises(CarrierError):
        spitzer_check(FiniteSumRB(), SeqFn([I2, E12]), 2)
    with pytest.raises(PreconditionError):
        spitzer_check(FiniteSumRB(1.0), SeqFn.scalars([0.5, 0.25]), 2)


def test_noncommutative_carrier_breaks_the_scalar_formula():
    # the commutative exponent does not give the Picard solution for matrices
    R = FiniteSumRB()
    a = SeqFn([E12, E21, I2, E12])
    Y = picard_solve(FixpointProblem(R, "plain", a, 3))
    assert Y != series_exp(spitzer_exponent(R, a, 3))


# -- E and F closed forms


def test_ef_zero_b():
    a = A_STD
    ef = atkinson_ef(IntegralRB(), a, a.zero(), 3)
    assert ef.E == Series.constant(a, 3)
    assert ef.F == Series.constant(IntegralRB()(a), 3)


@given(poly_matrices(2, 1), poly_matrices(2, 1))
def test_ef_integral(a, b):
    ef = atkinson_ef(IntegralRB(), a, b, 4)
    assert ef.E_residual.is_zero() and ef.F_residual.is_zero()


@given(sequences(2, 5), sequences(2, 5))
def test_ef_finite_sum_matrices(a, b):
    ef = atkinson_ef(FiniteSumRB(), a, b, 4)
    assert ef.E_residual.is_zero() and ef.F_residual.is_zero()


@given(sequences(1, 6), sequences(1, 6))
def test_ef_finite_sum_scalars(a, b):
    ef = atkinson_ef(FiniteSumRB(), a, b, 4)
    assert ef.E_residual.is_zero() and ef.F_residual.is_zero()


def test_ef_matrix_lift():
    rng = rs.rng_for(9, "ef")
    a, b = rs.laurent_matrix(rng, 2, 1, 1), rs.laurent_matrix(rng, 2, 1, 1)
    ef = atkinson_ef(MatrixLiftRB(MinSubRB()), a, b, 3)
    assert ef.E_residual.is_zero() and ef.F_residual.is_zero()


def test_ef_a_equals_b_image_reconstruction():
    a = A_STD
    R = IntegralRB()
    ef = atkinson_ef(R, a, a, 4)
    # E - a = lambda X R(Y a a): its lambda^1 coefficient lies in the image of R
    assert (ef.E - Series.constant(a, 4))[1] == R(a * a)
    assert ef.E_residual.is_zero()


def test_ef_other_placement_fails_noncommutative():
    # F = R(aX) Y with X, Y the left/right solutions is not the F-recursion solution
    R = FiniteSumRB()
    a, b = SeqFn([E12, E21, I2, E12]), SeqFn([E21, I2, E12, E21])
    ef = atkinson_ef(R, a, b, 3)
    wrong = R(Series.constant(a, 3) * ef.X) * ef.Y
    assert wrong != ef.F_direct


# -- factorization


def test_factorization_zero_input():
    alpha = PolyMatrix.constant(Matrix([[0.1, 0.2], [0.0, 0.3]]))
    beta = PolyMatrix.constant(Matrix([[0.0, 0.1], [0.0, 0.1]]))
    f = atkinson_factorize(IntegralRB(), alpha.zero(), 3, alpha, beta)
    ea, eb = mat_exp(alpha.coefficient(0)), mat_exp(beta.coefficient(0))
    assert np.allclose(f.X[0].coefficient(0).data, ea.data, atol=1e-15)
    assert np.allclose(f.Y[0].coefficient(0).data, eb.data, atol=1e-15)
    assert float(f.residual.norm()) <= 1e-15


def test_factorization_integral_exact():
    f = atkinson_factorize(IntegralRB(), A_STD, 5)
    assert f.residual.is_zero()
    assert all(c.is_zero() for c in f.chain)
    assert f.gamma.is_zero()


@given(sequences(2, 5))
def test_factorization_weight_general(a):
    for step in (Fraction(1), Fraction(-1), Fraction(2, 3)):
        f = atkinson_factorize(FiniteSumRB(step), a, 4)
        assert f.residual.is_zero()
        assert all(c.is_zero() for c in f.chain)


@given(sequences(2, 5))
def test_unit_form_holds_at_weight_minus_one(a):
    f = atkinson_factorize(FiniteSumRB(Fraction(-1)), a, 4)
    assert f.unit_form_residual.is_zero()


def test_unit_form_holds_for_lifted_pole_part():
    rng = rs.rng_for(9, "atk")
    a = rs.laurent_matrix(rng, 2, 1, 1)
    f = atkinson_factorize(MatrixLiftRB(MinSubRB()), a, 3)
    assert f.residual.is_zero() and f.unit_form_residual.is_zero()


def test_unit_form_fails_away_from_weight_minus_one():
    assert not atkinson_factorize(IntegralRB(), A_STD, 3).unit_form_residual.is_zero()
    a = SeqFn([E12, E21, I2, E12])
    assert not atkinson_factorize(FiniteSumRB(), a, 3).unit_form_residual.is_zero()


def test_factorization_float_central():
    rng = rs.rng_for(9, "atk-float")
    n = 5
    d1 = Matrix(np.diag([0.2, -0.1]))
    d2 = Matrix(np.diag([0.05, 0.3]))
    alpha, beta = SeqFn.constant(d1, n), SeqFn.constant(d2, n)
    a = rs.sequence(rng, 2, n, False)
    samples = [rs.sequence(rng, 2, n, False) for _ in range(3)]
    f = atkinson_factorize(FiniteSumRB(1.0), a, 4, alpha, beta, samples=samples)
    assert float(f.residual.norm()) <= 1e-10
    assert f.gamma is not None
    assert np.allclose(f.exp_gamma[0].data, mat_exp(d1 + d2).data, atol=1e-14)


def test_factorization_rejects_non_central():
    t1 = PolyMatrix.monomial(Matrix.identity(2, exact=False), 1)
    a = A_STD.to_float()
    with pytest.raises(PreconditionError):
        atkinson_factorize(IntegralRB(), a, 2, t1, None, samples=[a])


def test_factorization_noncommuting_exponents_have_no_gamma():
    alpha = SeqFn.constant(E12, 4)
    beta = SeqFn.constant(E21, 4)
    f = atkinson_factorize(FiniteSumRB(), SeqFn([I2] * 4), 2, alpha, beta)
    assert f.gamma is None
    assert f.residual.is_zero()
