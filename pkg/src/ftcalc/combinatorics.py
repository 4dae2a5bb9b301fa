"""Exact combinatorial kernel: Stirling numbers, Bernoulli numbers, factorials.

All values are exact (Python ints / fractions.Fraction), memoized in
row-complete tables so concurrent readers never observe a torn row.

Conventions:
  * Bernoulli numbers use B_1 = -1/2 (the x/(e^x - 1) generating function).
  * (x)_n with n < 0 means 1/((x+1)(x+2)...(x+|n|)).
  * x**(rising n) with n < 0 means 1/((x-1)(x-2)...(x-|n|)).
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Union

Rational = Fraction
Scalar = Union[Fraction, int, float]

_lock = threading.Lock()

# Row-complete triangular caches; a row is appended only once fully built.
_stirling1_rows: list[list[int]] = [[1]]
_stirling2_rows: list[list[int]] = [[1]]
_bernoulli_cache: list[Fraction] = [Fraction(1)]


def _grow_stirling1(n: int) -> None:
    with _lock:
        while len(_stirling1_rows) <= n:
            m = len(_stirling1_rows) - 1
            prev = _stirling1_rows[m]
            row = [0] * (m + 2)
            for k in range(m + 2):
                left = prev[k - 1] if 1 <= k <= m + 1 else 0
                right = prev[k] if k <= m else 0
                row[k] = left + m * right
            _stirling1_rows.append(row)


def _grow_stirling2(n: int) -> None:
    with _lock:
        while len(_stirling2_rows) <= n:
            m = len(_stirling2_rows) - 1
            prev = _stirling2_rows[m]
            row = [0] * (m + 2)
            for k in range(m + 2):
                left = prev[k - 1] if 1 <= k <= m + 1 else 0
                right = prev[k] if k <= m else 0
                row[k] = left + k * right
            _stirling2_rows.append(row)


def stirling_first_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind c(n, k).

    Counts permutations of n elements with k cycles; satisfies
    c(n+1, k) = c(n, k-1) + n*c(n, k) with c(0, 0) = 1.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if k > n:
        return 0
    if n >= len(_stirling1_rows):
        _grow_stirling1(n)
    return _stirling1_rows[n][k]


def stirling_first_signed(n: int, k: int) -> int:
    """Signed Stirling number s(n, k) = (-1)^(n-k) c(n, k)."""
    c = stirling_first_unsigned(n, k)
    return -c if (n - k) % 2 else c


def stirling_second(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k) (set partitions).

    Satisfies S(n+1, k) = k*S(n, k) + S(n, k-1) with S(0, 0) = 1.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if k > n:
        return 0
    if n >= len(_stirling2_rows):
        _grow_stirling2(n)
    return _stirling2_rows[n][k]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with the B_1 = -1/2 convention."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n >= len(_bernoulli_cache):
        with _lock:
            while len(_bernoulli_cache) <= n:
                m = len(_bernoulli_cache)
                # sum_{k=0}^{m} binom(m+1, k) B_k = 0 for m >= 1
                acc = sum(
                    (Fraction(math.comb(m + 1, k)) * _bernoulli_cache[k] for k in range(m)),
                    start=Fraction(0),
                )
                _bernoulli_cache.append(-acc / (m + 1))
    return _bernoulli_cache[n]


def binomial_general(x: Scalar, n: int) -> Scalar:
    """Generalized binomial coefficient binom(x, n) = (x)_n / n!.

    Exact Fraction for Fraction/int x, float for float x.
    """
    if n < 0:
        raise ValueError("lower index must be nonnegative")
    if isinstance(x, float):
        out = 1.0
        for j in range(n):
            out *= (x - j) / (j + 1)
        return out
    out = Fraction(1)
    x = Fraction(x)
    for j in range(n):
        out *= (x - j)
    return out / math.factorial(n)


def falling_factorial(x: Scalar, n: int) -> Scalar:
    """(x)_n for any integer n.

    n >= 0: x(x-1)...(x-n+1), empty product = 1.
    n < 0:  1/((x+1)(x+2)...(x+|n|)); raises ZeroDivisionError when a
    factor vanishes.
    """
    if n >= 0:
        out = _one_like(x)
        for j in range(n):
            out = out * (x - j)
        return out
    denom = _one_like(x)
    for j in range(1, -n + 1):
        denom = denom * (x + j)
    return _invert(denom)


def rising_factorial(x: Scalar, n: int) -> Scalar:
    """Pochhammer x^(rising n) for any integer n.

    n >= 0: x(x+1)...(x+n-1); n < 0: 1/((x-1)(x-2)...(x-|n|)).
    Satisfies x^(rising n) = (-1)^n (-x)_n for n >= 0.
    """
    if n >= 0:
        out = _one_like(x)
        for j in range(n):
            out = out * (x + j)
        return out
    denom = _one_like(x)
    for j in range(1, -n + 1):
        denom = denom * (x - j)
    return _invert(denom)


def _one_like(x: Scalar) -> Scalar:
    return 1.0 if isinstance(x, float) else Fraction(1)


def _invert(d: Scalar):
    if isinstance(d, float):
        if d == 0.0:
            raise ZeroDivisionError("vanishing factor in negative-index factorial")
        return 1.0 / d
    if d == 0:
        raise ZeroDivisionError("vanishing factor in negative-index factorial")
    return Fraction(1) / d
