"""Tests for basis polynomials and the finite-difference operator calculus.

Evaluation at random rational points is the main oracle: every structural
operation (conversion, product, shift, operator application) must commute
with eval. Everything here is exact Fraction arithmetic, so assertions are
equalities, never tolerances.
"""

from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ftcalc.combinatorics import falling_factorial
from ftcalc.polynomial import (
    Basis,
    BasisMismatchError,
    BasisPolynomial,
    OperatorExpr,
    OperatorKind,
    antiderivative,
    apply_operator,
    backward_difference,
    binom_shift,
    convert_basis,
    derivative,
    exp_shift,
    expdiff_minus1,
    expdiff_minus1_inverse,
    falling_unit,
    forward_difference,
    indefinite_sum,
    log1p_derivative,
    log1p_derivative_inverse,
    monomial,
    multiply,
    negate_argument,
    poly,
    scale_argument,
    scale_op,
    shift,
    shift_op,
)

coeff_lists = st.lists(
    st.fractions(min_value=-9, max_value=9, max_denominator=9), min_size=0, max_size=8
)
bases = st.sampled_from([Basis.MONOMIAL, Basis.FALLING, Basis.RISING])
points = st.fractions(min_value=-6, max_value=6, max_denominator=8)


@given(coeff_lists, bases, bases, points)
def test_convert_basis_preserves_eval(coeffs, b1, b2, x):
    """Changing basis never changes the polynomial as a function."""
    p = poly(b1, coeffs)
    assert convert_basis(p, b2).eval(x) == p.eval(x)


@given(coeff_lists, bases, bases)
def test_convert_basis_roundtrip(coeffs, b1, b2):
    """Conversion there and back is the identity on coefficients."""
    p = poly(b1, coeffs)
    assert convert_basis(convert_basis(p, b2), b1) == p


@given(coeff_lists, bases)
def test_convert_to_own_basis_is_identity(coeffs, b):
    p = poly(b, coeffs)
    assert convert_basis(p, b) == p


def test_poly_accepts_basis_strings():
    p = poly("falling", [1, 2])
    assert p.basis is Basis.FALLING
    assert convert_basis(p, "monomial").basis is Basis.MONOMIAL
    with pytest.raises(ValueError):
        poly("hermite", [1])


def test_eval_semantics_per_basis():
    x = Fraction(7, 2)
    c = [Fraction(2), Fraction(-1), Fraction(3)]
    assert poly(Basis.MONOMIAL, c).eval(x) == 2 - x + 3 * x * x
    assert poly(Basis.FALLING, c).eval(x) == 2 - x + 3 * x * (x - 1)
    assert poly(Basis.RISING, c).eval(x) == 2 - x + 3 * x * (x + 1)


def test_falling_unit_is_basis_element():
    p = falling_unit(3)
    assert p.basis is Basis.FALLING
    assert p.coeffs == (0, 0, 0, 1)
    assert p.eval(Fraction(5)) == falling_factorial(Fraction(5), 3)


def test_trailing_zeros_normalized():
    assert monomial([1, 2, 0, 0]) == monomial([1, 2])
    assert monomial([0, 0]).is_zero()
    assert monomial([]).degree == monomial([0]).degree


@given(coeff_lists, coeff_lists, points)
def test_add_sub_match_eval(a, b, x):
    p, q = monomial(a), monomial(b)
    assert (p + q).eval(x) == p.eval(x) + q.eval(x)
    assert (p - q).eval(x) == p.eval(x) - q.eval(x)


@given(coeff_lists, coeff_lists, bases, points)
def test_multiply_matches_eval(a, b, basis, x):
    """Products are computed within a basis and agree with pointwise product."""
    p, q = poly(basis, a), poly(basis, b)
    assert multiply(p, q).eval(x) == p.eval(x) * q.eval(x)
    assert multiply(p, q).basis is basis


def test_mixed_basis_operations_rejected():
    p = monomial([1, 1])
    q = poly(Basis.FALLING, [1, 1])
    with pytest.raises(BasisMismatchError):
        p + q
    with pytest.raises(BasisMismatchError):
        p - q
    with pytest.raises(BasisMismatchError):
        multiply(p, q)


@given(coeff_lists, bases, points, points)
def test_shift_matches_eval(coeffs, basis, a, x):
    """shift(p, a)(x) = p(x + a), staying in the basis of p."""
    p = poly(basis, coeffs)
    s = shift(p, a)
    assert s.basis is basis
    assert s.eval(x) == p.eval(x + a)


@given(coeff_lists, bases, points, points)
def test_scale_argument_matches_eval(coeffs, basis, a, x):
    p = poly(basis, coeffs)
    assert scale_argument(p, a).eval(x) == p.eval(a * x)


@given(coeff_lists, bases, points)
def test_negate_argument_matches_eval(coeffs, basis, x):
    p = poly(basis, coeffs)
    assert negate_argument(p).eval(x) == p.eval(-x)


def test_negate_argument_swaps_factorial_bases():
    assert negate_argument(poly(Basis.FALLING, [0, 1, 2])).basis is Basis.RISING
    assert negate_argument(poly(Basis.RISING, [0, 1, 2])).basis is Basis.FALLING
    assert negate_argument(monomial([1, 2])).basis is Basis.MONOMIAL


@given(coeff_lists, points)
def test_derivative_operator(coeffs, x):
    """d(p) agrees with the coefficient-level derivative of the monomial form."""
    p = monomial(coeffs)
    dp = apply_operator(derivative(), p)
    expected = monomial([(n + 1) * c for n, c in enumerate(coeffs[1:])])
    assert dp.eval(x) == expected.eval(x)


@given(coeff_lists, bases, points)
def test_forward_difference_operator(coeffs, basis, x):
    """D(p)(x) = p(x+1) - p(x) in any basis."""
    p = poly(basis, coeffs)
    dp = apply_operator(forward_difference(), p)
    assert dp.basis is basis
    assert dp.eval(x) == p.eval(x + 1) - p.eval(x)


@given(coeff_lists, points)
def test_backward_difference_operator(coeffs, x):
    p = monomial(coeffs)
    assert apply_operator(backward_difference(), p).eval(x) == p.eval(x) - p.eval(x - 1)


@given(coeff_lists, st.integers(min_value=0, max_value=3), points)
def test_operator_powers_iterate(coeffs, k, x):
    """forward_difference(k) equals k single applications."""
    p = monomial(coeffs)
    q = p
    for _ in range(k):
        q = apply_operator(forward_difference(), q)
    assert apply_operator(forward_difference(k), p).eval(x) == q.eval(x)


@given(coeff_lists, points, points)
def test_shift_op_is_shift(coeffs, a, x):
    p = monomial(coeffs)
    assert apply_operator(shift_op(a), p) == shift(p, a)


def test_exp_shift_hand_values():
    """e^{aD} on x and x^2: the series runs over forward differences."""
    a = Fraction(3, 2)
    x = monomial([0, 1])
    x2 = monomial([0, 0, 1])
    assert apply_operator(exp_shift(a), x) == monomial([a, 1])
    # x^2 + a(2x+1) + a^2
    assert apply_operator(exp_shift(a), x2) == monomial([a + a * a, 2 * a, 1])


def test_binom_shift_hand_values():
    """(1+d)^a on x^2 = x^2 + 2ax + a(a-1)."""
    a = Fraction(2)
    x2 = monomial([0, 0, 1])
    assert apply_operator(binom_shift(a), x2) == monomial([a * (a - 1), 2 * a, 1])


def test_log1p_derivative_hand_value():
    """log(1+d) on x^2 = 2x - 1."""
    got = apply_operator(log1p_derivative(), monomial([0, 0, 1]))
    assert got == monomial([-1, 2])


@given(coeff_lists, points, points, points)
def test_parameter_operators_compose_additively(coeffs, a, b, x):
    """exp_shift and binom_shift form one-parameter groups."""
    p = monomial(coeffs)
    for factory in (exp_shift, binom_shift):
        lhs = apply_operator(factory(a), apply_operator(factory(b), p))
        rhs = apply_operator(factory(a + b), p)
        assert lhs.eval(x) == rhs.eval(x)


@given(coeff_lists, points, points, points)
def test_scale_op_composes_multiplicatively(coeffs, a, b, x):
    p = poly(Basis.FALLING, coeffs)
    lhs = apply_operator(scale_op(a), apply_operator(scale_op(b), p))
    assert lhs.eval(x) == apply_operator(scale_op(a * b), p).eval(x)
    assert apply_operator(scale_op(Fraction(1)), p) == p


@given(coeff_lists, bases)
def test_operator_result_keeps_input_basis(coeffs, basis):
    p = poly(basis, coeffs)
    for op in (derivative(), forward_difference(), backward_difference(),
               shift_op(Fraction(1, 2)), exp_shift(2), binom_shift(2)):
        assert apply_operator(op, p).basis is basis


@given(coeff_lists, points)
def test_antiderivative_inverts_derivative(coeffs, x):
    """d(antiderivative(p)) = p, and the antiderivative vanishes at 0."""
    p = monomial(coeffs)
    F = antiderivative(p)
    assert apply_operator(derivative(), F).eval(x) == p.eval(x)
    assert F.eval(Fraction(0)) == 0


@given(coeff_lists, points)
def test_indefinite_sum_inverts_forward_difference(coeffs, x):
    p = monomial(coeffs)
    S = indefinite_sum(p)
    assert apply_operator(forward_difference(), S).eval(x) == p.eval(x)
    assert S.eval(Fraction(0)) == 0


@given(coeff_lists, st.integers(min_value=0, max_value=12))
def test_indefinite_sum_telescopes(coeffs, N):
    """S(N) = sum_{j<N} p(j), the discrete analogue of the integral."""
    p = monomial(coeffs)
    S = indefinite_sum(p)
    assert S.eval(Fraction(N)) == sum((p.eval(Fraction(j)) for j in range(N)), Fraction(0))


@given(coeff_lists, points)
def test_series_inverse_operators_roundtrip(coeffs, x):
    """L applied to the zero-constant preimage gives back p for both kernels."""
    p = monomial(coeffs)
    q = log1p_derivative_inverse(p)
    assert apply_operator(log1p_derivative(), q).eval(x) == p.eval(x)
    assert q.eval(Fraction(0)) == 0
    r = expdiff_minus1_inverse(p)
    assert apply_operator(expdiff_minus1(), r).eval(x) == p.eval(x)
    assert r.eval(Fraction(0)) == 0


def test_operator_expr_validation():
    with pytest.raises(ValueError):
        derivative(-1)
    with pytest.raises(ValueError):
        OperatorExpr(OperatorKind.SHIFT)  # parameter a is required
    with pytest.raises(ValueError):
        OperatorExpr(OperatorKind.DERIVATIVE, a=Fraction(1))  # power kinds take none


@given(coeff_lists, bases)
def test_json_roundtrip(coeffs, basis):
    """to_json/from_json preserve basis and exact coefficients."""
    p = poly(basis, coeffs)
    blob = p.to_json()
    q = BasisPolynomial.from_json(blob)
    assert q == p
    assert all(isinstance(c, str) for c in blob["coeffs"])


def test_from_json_rejects_malformed():
    with pytest.raises((ValueError, KeyError)):
        BasisPolynomial.from_json({"coeffs": ["1"]})
    with pytest.raises(ValueError):
        BasisPolynomial.from_json({"basis": "monomial", "coeffs": ["1/0"]})


@given(coeff_lists)
def test_scale_and_coeff_access(coeffs):
    p = monomial(coeffs)
    assert p.scale(Fraction(3)).eval(Fraction(2)) == 3 * p.eval(Fraction(2))
    assert p.coeff(len(coeffs) + 5) == 0
