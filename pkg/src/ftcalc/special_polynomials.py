"""Named polynomial families: Touchard, Z_n, generalized Laguerre, Charlier.

Touchard T_n collects Stirling-second numbers, Z_n collects signed
Stirling-first numbers over the falling basis. Laguerre uses the
generalized-binomial definition so rational (including negative) alpha is
exact. Charlier follows the 2F0 normalization
c_n(x, a) = sum_k binom(n,k) binom(x,k) k! (-a)^(-k).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .combinatorics import binomial_general, stirling_first_signed, stirling_second
from .polynomial import Basis, BasisPolynomial

Scalar = Union[Fraction, int, float]


def touchard(n: int) -> BasisPolynomial:
    """T_n(x) = sum_k S(n,k) x^k in the monomial basis; T_0 = 1."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    return BasisPolynomial(Basis.MONOMIAL, [stirling_second(n, k) for k in range(n + 1)])


def z_poly(n: int) -> BasisPolynomial:
    """Z_n = sum_k s(n,k) (x)_k in the falling basis (signed Stirling-first)."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    return BasisPolynomial(Basis.FALLING, [stirling_first_signed(n, k) for k in range(n + 1)])


def laguerre(n: int, alpha: Scalar) -> BasisPolynomial:
    """Generalized Laguerre L_n^(alpha) as a monomial polynomial in y.

    L_n^(alpha)(y) = sum_k binom(n+alpha, n-k) (-y)^k / k!, valid for any
    rational alpha.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    alpha = Fraction(alpha)
    coeffs = []
    for k in range(n + 1):
        c = binomial_general(n + alpha, n - k) * Fraction((-1) ** k, math.factorial(k))
        coeffs.append(c)
    return BasisPolynomial(Basis.MONOMIAL, coeffs)


def charlier(n: int, x: Scalar, a: Scalar):
    """Charlier value c_n(x, a) = sum_k binom(n,k) binom(x,k) k! (-a)^(-k).

    Exact Fraction for rational inputs, float when x or a is float.
    Raises ValueError for a = 0.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    if a == 0:
        raise ValueError("Charlier parameter a must be nonzero")
    numeric = isinstance(x, float) or isinstance(a, float)
    if not numeric:
        x, a = Fraction(x), Fraction(a)
    acc = 0.0 if numeric else Fraction(0)
    for k in range(n + 1):
        term = math.comb(n, k) * binomial_general(x, k) * math.factorial(k)
        term = term * (-a) ** (-k) if numeric else term * (Fraction(-1) / a) ** k
        acc += term
    return acc


def charlier_orthogonality_sum(n: int, m: int, a: float, K: int) -> float:
    """Partial sum over k < K of a^k/k! * c_n(k,a) c_m(k,a) (Poisson weight)."""
    if K < 1:
        raise ValueError("truncation K must be >= 1")
    if a <= 0:
        raise ValueError("weight parameter a must be positive")
    acc = 0.0
    w = 1.0  # a^k / k!
    for k in range(K):
        if k > 0:
            w *= a / k
        acc += w * charlier(n, float(k), a) * charlier(m, float(k), a)
    return acc
