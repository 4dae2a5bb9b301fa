"""Exact transforms on polynomials and integer-indexed sequences.

The four transforms are coefficient reinterpretations between the monomial
and factorial bases. Binomial transform / convolution are finite sums at
nonnegative integer arguments (the infinite-argument versions live in the
numeric layer). All arithmetic is rational.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence, Union

from .combinatorics import binomial_general
from .polynomial import Basis, BasisPolynomial, apply_operator, convert_basis, derivative, multiply

SequenceSource = Union[BasisPolynomial, Callable[[int], Fraction]]


def fft_poly(p: BasisPolynomial) -> BasisPolynomial:
    """Falling factorial transform: monomial coefficients re-read over (x)_n."""
    mono = convert_basis(p, Basis.MONOMIAL)
    return BasisPolynomial(Basis.FALLING, mono.coeffs)


def ifft_poly(p: BasisPolynomial) -> BasisPolynomial:
    """Inverse falling transform: falling coefficients re-read over x^n."""
    fall = convert_basis(p, Basis.FALLING)
    return BasisPolynomial(Basis.MONOMIAL, fall.coeffs)


def rft_poly(p: BasisPolynomial) -> BasisPolynomial:
    """Rising factorial transform: monomial coefficients re-read over x^(rising n)."""
    mono = convert_basis(p, Basis.MONOMIAL)
    return BasisPolynomial(Basis.RISING, mono.coeffs)


def irft_poly(p: BasisPolynomial) -> BasisPolynomial:
    """Inverse rising transform: rising coefficients re-read over x^n."""
    ris = convert_basis(p, Basis.RISING)
    return BasisPolynomial(Basis.MONOMIAL, ris.coeffs)


def _seq(f: SequenceSource) -> Callable[[int], Fraction]:
    if isinstance(f, BasisPolynomial):
        return lambda n: f.eval(Fraction(n))
    return f


def binomial_transform(f: SequenceSource, x: int) -> Fraction:
    """BT(f)(x) = sum_{n=0}^{x} binom(x,n) f(n) at nonnegative integer x."""
    if x < 0:
        raise ValueError("argument must be a nonnegative integer")
    g = _seq(f)
    return sum((Fraction(math.comb(x, n)) * g(n) for n in range(x + 1)), start=Fraction(0))


def inverse_binomial_transform(f: SequenceSource, x: int) -> Fraction:
    """BT^{-1}(f)(x) = sum_{n=0}^{x} binom(x,n) (-1)^(x-n) f(n).

    The finite alternating realization; BT^{-1}(BT(f)) = f pointwise.
    """
    if x < 0:
        raise ValueError("argument must be a nonnegative integer")
    g = _seq(f)
    acc = Fraction(0)
    for n in range(x + 1):
        term = Fraction(math.comb(x, n)) * g(n)
        acc += -term if (x - n) % 2 else term
    return acc


def binomial_convolution(f: SequenceSource, g: SequenceSource, x: int) -> Fraction:
    """conv(f,g)(x) = sum_{n=0}^{x} binom(x,n) f(x-n) g(n); commutative."""
    if x < 0:
        raise ValueError("argument must be a nonnegative integer")
    ff, gg = _seq(f), _seq(g)
    return sum(
        (Fraction(math.comb(x, n)) * ff(x - n) * gg(n) for n in range(x + 1)),
        start=Fraction(0),
    )


def egf_product_coeffs(F: SequenceSource, G: SequenceSource, K: int) -> list[Fraction]:
    """h_k for k < K with sum h_k x^k / k! = (EGF of F) * (EGF of G).

    h_k = conv(F, G)(k); iterating the function realizes higher EGF powers.
    """
    if K < 1:
        raise ValueError("order K must be >= 1")
    return [binomial_convolution(F, G, k) for k in range(K)]


def hadamard_ifft(f: BasisPolynomial, g: BasisPolynomial) -> BasisPolynomial:
    """FFT^{-1}(f*g) computed as sum_k d^k(FFT^{-1} f) d^k(FFT^{-1} g) x^k/k!.

    Equals ifft_poly(multiply(f, g)) exactly; the sum stops at the smaller
    degree.
    """
    F = ifft_poly(f)
    G = ifft_poly(g)
    kmax = min(F.degree, G.degree)
    acc = BasisPolynomial(Basis.MONOMIAL, [])
    for k in range(kmax + 1):
        dF = apply_operator(derivative(k), F)
        dG = apply_operator(derivative(k), G)
        if dF.is_zero() or dG.is_zero():
            break
        xk = BasisPolynomial(Basis.MONOMIAL, [0] * k + [Fraction(1, math.factorial(k))])
        acc = acc + multiply(multiply(dF, dG), xk)
    return acc


def coefficient_extract(f: Union[BasisPolynomial, Callable[[int], Fraction]], n: int) -> Fraction:
    """n-th power-series coefficient of f via the e^{-x}-weighted Newton sum.

    f supplies Taylor coefficients (a BasisPolynomial or a callable j -> a_j);
    at integer n the chain a(n) = FFT(e^{-x} f(x))(n) / n! is a finite exact
    sum.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    if isinstance(f, BasisPolynomial):
        mono = convert_basis(f, Basis.MONOMIAL)
        a = mono.coeff
    else:
        a = f
    acc = Fraction(0)
    for k in range(n + 1):
        # Cauchy coefficient of e^{-x} f(x)
        c = sum(
            (Fraction((-1) ** (k - j), math.factorial(k - j)) * Fraction(a(j)) for j in range(k + 1)),
            start=Fraction(0),
        )
        acc += Fraction(math.comb(n, k)) * math.factorial(k) * c
    return acc / math.factorial(n)


def newton_from_samples(f: SequenceSource, degree: int) -> BasisPolynomial:
    """Falling-basis polynomial interpolating f on 0..degree (Newton series).

    Coefficient of (x)_j is the forward difference D^j f(0) / j!. Exact for
    polynomial-sampled sequences of the given degree.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    g = _seq(f)
    row = [Fraction(g(n)) for n in range(degree + 1)]
    coeffs = [row[0]]
    for j in range(1, degree + 1):
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        coeffs.append(row[0] / math.factorial(j))
    return BasisPolynomial(Basis.FALLING, coeffs)
