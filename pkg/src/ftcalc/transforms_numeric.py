"""Floating-point transforms on functions.

Newton sums (falling transform of Taylor sources), EGF series (inverse
transforms of integer samples), Gauss-Laguerre quadrature for the rising
transform, fractional derivatives/differences, and the gamma-function
support used by the verification checks.

Numeric policy: series follow the NumericConfig tail policy. When direct
summation misses the stop criterion within truncation_N, the Newton-sum
evaluator applies Wynn's epsilon extrapolation to the partial sums before
giving up; slowly converging Newton series (binom(s,n) tails decay only like
n^(-s-1)) are routine and direct summation alone cannot reach practical
tolerances. The returned error estimate is then the extrapolation's internal
agreement, otherwise the magnitude of the first omitted weighted term.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence, Union

import mpmath as mp
from scipy.special import roots_genlaguerre, roots_laguerre

from .combinatorics import bernoulli, rising_factorial

Number = Union[int, float, Fraction]


class NonConvergenceError(ArithmeticError):
    """Series failed its tail policy within the configured truncation."""


class QuadratureError(ArithmeticError):
    """Node doubling changed the quadrature result by more than tolerance."""


class NumericResult(float):
    """A float carrying an error_estimate attribute."""

    error_estimate: float

    def __new__(cls, value: float, error_estimate: float = 0.0):
        obj = super().__new__(cls, value)
        obj.error_estimate = float(error_estimate)
        return obj

    def __repr__(self):
        return f"NumericResult({float(self)!r}, error_estimate={self.error_estimate!r})"


@dataclass(frozen=True)
class SeriesSource:
    """Supplier of Taylor coefficients, integer samples, or point values.

    kind 'taylor': provider(n) is the coefficient a_n of x^n (exact or float).
    kind 'integer_samples': provider(n) is f(n) for nonnegative integers.
    kind 'callable': provider(x) is f(x) at real arguments.
    radius is a validity hint for taylor providers (positive, may be inf).
    """

    kind: str
    provider: Callable
    radius: float = math.inf

    def __post_init__(self):
        if self.kind not in ("taylor", "integer_samples", "callable"):
            raise ValueError(f"unknown source kind {self.kind!r}")
        if not (self.radius > 0):
            raise ValueError("radius hint must be positive")


def taylor_source(provider: Callable[[int], Number], radius: float = math.inf) -> SeriesSource:
    return SeriesSource("taylor", provider, radius)


def samples_source(provider: Callable[[int], Number]) -> SeriesSource:
    return SeriesSource("integer_samples", provider)


def callable_source(provider: Callable[[float], float]) -> SeriesSource:
    return SeriesSource("callable", provider)


@dataclass(frozen=True)
class NumericConfig:
    truncation_N: int = 64
    tolerance: float = 1e-10
    tail_policy: str = "stop_when_term_below"  # or "fixed_N"

    def __post_init__(self):
        if self.truncation_N < 1:
            raise ValueError("truncation_N must be >= 1")
        if not (self.tolerance > 0):
            raise ValueError("tolerance must be positive")
        if self.tail_policy not in ("fixed_N", "stop_when_term_below"):
            raise ValueError(f"unknown tail policy {self.tail_policy!r}")


@dataclass(frozen=True)
class QuadratureSpec:
    nodes: int = 80
    scheme: str = "gauss_laguerre"  # or "adaptive_fallback", "tanh_sinh"

    def __post_init__(self):
        if self.nodes < 2:
            raise ValueError("nodes must be >= 2")
        if self.scheme not in ("gauss_laguerre", "adaptive_fallback", "tanh_sinh"):
            raise ValueError(f"unknown quadrature scheme {self.scheme!r}")


# Gauss-Laguerre rules become numerically unreliable (overflow in the node
# solver / weight recurrences) beyond a few hundred nodes.
_MAX_NODES = 256

_node_cache: dict = {}
_node_lock = threading.Lock()

# mpmath working precision is process-global state; serialize tanh_sinh use
# so concurrent check runs cannot corrupt each other's precision context.
_mp_lock = threading.Lock()


def _gauss_laguerre_rule(n: int, alpha: float):
    key = (n, alpha)
    rule = _node_cache.get(key)
    if rule is None:
        with _node_lock:
            rule = _node_cache.get(key)
            if rule is None:
                if alpha == 0.0:
                    x, w = roots_laguerre(n)
                else:
                    x, w = roots_genlaguerre(n, alpha)
                rule = (tuple(float(v) for v in x), tuple(float(v) for v in w))
                _node_cache[key] = rule
    return rule


def wynn_epsilon(partial_sums: Sequence[complex]) -> tuple[complex, float]:
    """Accelerate a sequence of partial sums with Wynn's epsilon algorithm.

    Returns (best_estimate, agreement) where agreement is the distance
    between the two best even-column diagonal entries; columns are truncated
    at the first degenerate (zero-difference or overflowing) cell.
    """
    sums = list(partial_sums)
    if not sums:
        raise ValueError("need at least one partial sum")
    prev: list[complex] = [0j] * (len(sums) + 1)
    cur: list[complex] = [complex(s) for s in sums]
    diag = [cur[-1]]
    col = 0
    while len(cur) > 1:
        nxt: list[complex] = []
        for i in range(len(cur) - 1):
            d = cur[i + 1] - cur[i]
            if d == 0:
                break
            v = prev[i + 1] + 1.0 / d
            if not (abs(v) < 1e300):
                break
            nxt.append(v)
        if not nxt:
            break
        prev = cur[: len(nxt) + 1]
        cur = nxt
        col += 1
        if col % 2 == 0:
            diag.append(cur[-1])
    best, err = diag[-1], math.inf
    for a, b in zip(diag, diag[1:]):
        d = abs(b - a)
        if d <= err:
            best, err = b, d
    if len(diag) == 1:
        err = math.inf
    return best, err


_CONSECUTIVE_SMALL = 3


def _sum_with_policy(term_at: Callable[[int], float], cfg: NumericConfig,
                     accelerate: bool, what: str) -> tuple[float, float]:
    """Sum term_at(0..) under cfg; returns (sum, error_estimate).

    stop_when_term_below stops after _CONSECUTIVE_SMALL successive terms fall
    below tolerance * max(1, |partial sum|); fixed_N always consumes exactly
    truncation_N terms. When the stop criterion is unmet and accelerate is
    set, epsilon extrapolation of the partial sums is attempted before
    raising NonConvergenceError.
    """
    N = cfg.truncation_N
    if cfg.tail_policy == "fixed_N":
        acc = math.fsum(term_at(n) for n in range(N))
        return acc, abs(term_at(N))
    acc = 0.0
    small = 0
    seen_nonzero = False
    sums: list[float] = []
    nonzero_sums: list[float] = []
    for n in range(N):
        t = term_at(n)
        if not math.isfinite(t):
            raise NonConvergenceError(f"{what}: term {n} is not finite")
        acc += t
        sums.append(acc)
        if t != 0.0:
            seen_nonzero = True
            nonzero_sums.append(acc)
        if seen_nonzero and abs(t) <= cfg.tolerance * max(1.0, abs(acc)):
            small += 1
            if small >= _CONSECUTIVE_SMALL:
                return acc, abs(t)
        else:
            small = 0
    if not seen_nonzero:
        return 0.0, 0.0
    if accelerate and len(nonzero_sums) >= 8:
        best, agree = wynn_epsilon(nonzero_sums)
        if agree <= cfg.tolerance * max(1.0, abs(best)):
            return best.real, agree
    raise NonConvergenceError(
        f"{what}: tail policy unmet after {N} terms (last |term| = {abs(t):.3e})"
    )


def fft_fn(src: SeriesSource, s: float, cfg: NumericConfig = NumericConfig()) -> NumericResult:
    """Newton-sum falling transform of a Taylor source at s.

    Computes sum_n binom(s,n) n! a_n = sum_n (s)_n a_n; exact finite sum when
    s is a nonnegative integer. Requires a taylor source: high-order numeric
    differentiation of a black-box callable is ill-conditioned, so there is
    no callable path here.
    """
    if src.kind != "taylor":
        raise ValueError("fft_fn requires a 'taylor' SeriesSource")
    a = src.provider
    # (s)_n overflows float64 near n = 171 even when the full term is tiny,
    # so each term is formed as an exact Fraction product and rounded once.
    s_frac = Fraction(s)
    ff_cache = [Fraction(1)]

    def term(n: int) -> float:
        while len(ff_cache) <= n:
            m = len(ff_cache)
            ff_cache.append(ff_cache[-1] * (s_frac - (m - 1)))
        return float(ff_cache[n] * Fraction(a(n)))

    val, est = _sum_with_policy(term, cfg, accelerate=True, what="fft_fn Newton sum")
    return NumericResult(val, est)


def ifft_fn(src: SeriesSource, x: float, cfg: NumericConfig = NumericConfig()) -> NumericResult:
    """Inverse falling transform e^{-x} sum_n f(n) x^n / n! of integer samples.

    The error estimate is the magnitude of the first omitted weighted term
    (meaningful for eventually monotone decaying terms).
    """
    if src.kind != "integer_samples":
        raise ValueError("ifft_fn requires an 'integer_samples' SeriesSource")
    f = src.provider
    damp = math.exp(-x)
    # x^n/n! underflows to exact zero long before factorial-scale samples
    # stop mattering; form each term exactly and round once.
    x_frac = Fraction(x)
    pw = [Fraction(1)]

    def term(n: int) -> float:
        while len(pw) <= n:
            m = len(pw)
            pw.append(pw[-1] * x_frac / m)
        return float(pw[n] * Fraction(f(n)))

    val, est = _sum_with_policy(term, cfg, accelerate=False, what="ifft_fn EGF series")
    return NumericResult(damp * val, damp * est)


def irft_fn(src: SeriesSource, x: float, cfg: NumericConfig = NumericConfig()) -> NumericResult:
    """Inverse rising transform e^{x} sum_n (-1)^n f(-n) x^n / n!.

    The source must be callable at the nonpositive integers -n.
    """
    if src.kind != "callable":
        raise ValueError("irft_fn requires a 'callable' SeriesSource")
    f = src.provider
    grow = math.exp(x)
    x_frac = Fraction(x)
    pw = [Fraction(1)]

    def term(n: int) -> float:
        while len(pw) <= n:
            m = len(pw)
            pw.append(pw[-1] * x_frac / m)
        v = pw[n] * Fraction(f(-n))
        return float(-v if n % 2 else v)

    val, est = _sum_with_policy(term, cfg, accelerate=False, what="irft_fn EGF series")
    return NumericResult(grow * val, grow * est)


def rft_fn(f: Callable[[float], float], s: float,
           quad: QuadratureSpec = QuadratureSpec(), tolerance: float = 1e-7) -> NumericResult:
    """Rising transform (1/Gamma(s)) * integral_0^inf f(t) t^(s-1) e^(-t) dt.

    Schemes: 'gauss_laguerre' (generalized weight, the default; the result is
    cross-checked against a doubled rule), 'adaptive_fallback' (plain
    Gauss-Laguerre on f(t) t^(s-1) with node doubling until stable), and
    'tanh_sinh' (mpmath double-exponential quadrature; required when the
    weighted integrand has an algebraically heavy tail that defeats
    Gauss-Laguerre, at the cost of needing an mpmath-safe callable).

    Raises QuadratureError when refinement moves the result by more than
    tolerance * max(1, |value|).
    """
    if not (s > 0):
        raise ValueError("rft_fn requires s > 0")
    gamma_s = math.gamma(s)

    if quad.scheme == "tanh_sinh":
        with _mp_lock, mp.workdps(25):
            ss = mp.mpf(s)
            val, err = mp.quad(
                lambda t: f(t) * t ** (ss - 1) * mp.e ** (-t),
                [0, 1, mp.inf], error=True,
            )
            return NumericResult(float(val / mp.gamma(ss)), float(abs(err) / gamma_s))

    if quad.scheme == "gauss_laguerre":
        n = min(quad.nodes, _MAX_NODES // 2)

        def estimate(m: int) -> float:
            xs, ws = _gauss_laguerre_rule(m, s - 1.0)
            return math.fsum(w * f(x) for x, w in zip(xs, ws))

        coarse, fine = estimate(n), estimate(2 * n)
        val = fine / gamma_s
        diff = abs(fine - coarse) / gamma_s
        if not math.isfinite(val) or diff > tolerance * max(1.0, abs(val)):
            raise QuadratureError(
                f"gauss_laguerre unstable at {n}->{2*n} nodes (moved {diff:.3e})"
            )
        return NumericResult(val, diff)

    # adaptive_fallback: plain Laguerre nodes on f(t) t^(s-1), doubling
    n = max(quad.nodes, 2)
    prev = None
    while n <= _MAX_NODES:
        xs, ws = _gauss_laguerre_rule(n, 0.0)
        cur = math.fsum(w * f(x) * x ** (s - 1.0) for x, w in zip(xs, ws))
        if prev is not None and math.isfinite(cur):
            diff = abs(cur - prev) / gamma_s
            if diff <= tolerance * max(1.0, abs(cur) / gamma_s):
                return NumericResult(cur / gamma_s, diff)
        prev = cur
        n *= 2
    raise QuadratureError(f"adaptive_fallback did not stabilize within {_MAX_NODES} nodes")


def _shifted_taylor(a: Callable[[int], Number], t: Number, count: int, extra: int = 32):
    """Taylor coefficients of u -> f(u + t) from those of f, truncated.

    a'_k = sum_{i >= k} binom(i, k) a_i t^(i-k), cut at count + extra source
    terms; exact when a yields Fractions and t is rational.
    """
    M = count + extra
    src = [a(i) for i in range(M)]
    exact = not isinstance(t, float) and all(not isinstance(v, float) for v in src)
    tt = Fraction(t) if exact else float(t)
    out = []
    for k in range(count):
        acc = Fraction(0) if exact else 0.0
        pw = Fraction(1) if exact else 1.0
        for i in range(k, M):
            acc += math.comb(i, k) * (src[i] if exact else float(src[i])) * pw
            pw *= tt
        out.append(acc)
    return out


def _exp_neg_convolve(coeffs: Sequence) -> list:
    """Cauchy product of e^{-x} with the given coefficient sequence."""
    exact = all(not isinstance(v, float) for v in coeffs)
    out = []
    for k in range(len(coeffs)):
        if exact:
            acc = sum(
                (Fraction((-1) ** m, math.factorial(m)) * coeffs[k - m] for m in range(k + 1)),
                start=Fraction(0),
            )
        else:
            acc = math.fsum(
                ((-1) ** m / math.factorial(m)) * float(coeffs[k - m]) for m in range(k + 1)
            )
        out.append(acc)
    return out


def fractional_derivative(src: SeriesSource, order: float, t: Number = 0,
                          cfg: NumericConfig = NumericConfig()) -> NumericResult:
    """Liouville-type fractional derivative of f at t from its Taylor source.

    Realized as the falling transform of e^{-x} f(x + t): shift the Taylor
    coefficients to t, convolve with e^{-x}, Newton-sum at s = order.
    """
    if src.kind != "taylor":
        raise ValueError("fractional_derivative requires a 'taylor' SeriesSource")
    count = cfg.truncation_N + 1
    if t == 0:
        base = [src.provider(i) for i in range(count)]
    else:
        base = _shifted_taylor(src.provider, t, count)
    weighted = _exp_neg_convolve(base)
    return fft_fn(taylor_source(lambda n: weighted[n]), order, cfg)


def fractional_difference(f: Callable[[float], float], order: float, t: float = 0.0,
                          cfg: NumericConfig = NumericConfig()) -> NumericResult:
    """Fractional forward difference of f at t via the inverse-BT chain.

    Chain: samples n -> f(n + t) form an EGF; multiplying twice by e^{-x}
    (coefficient convolution) realizes e^{-x} FFT^{-1}(f(x+t)); the Newton
    sum at s = order finishes BT^{-1}.
    """
    count = cfg.truncation_N + 1
    egf = [f(t + n) / math.factorial(n) for n in range(count)]
    inner = _exp_neg_convolve(egf)   # Taylor of FFT^{-1}(f(x+t))
    outer = _exp_neg_convolve(inner)  # times e^{-x} again
    return fft_fn(taylor_source(lambda n: outer[n]), order, cfg)


def gamma_support(x: float) -> float:
    """Gamma(x) for real x away from the poles (Lanczos-backed libm gamma)."""
    try:
        return math.gamma(x)
    except ValueError:
        raise ValueError(f"gamma pole at x = {x}") from None


def incomplete_gamma_upper(n: int, x: float) -> float:
    """Upper incomplete gamma Gamma(n, x) for integer n >= 1, any real x.

    Closed form (n-1)! e^{-x} sum_{k<n} x^k/k!; valid (as the analytic
    continuation) for negative x as well.
    """
    if n < 1:
        raise ValueError("order n must be a positive integer")
    acc = math.fsum(x ** k / math.factorial(k) for k in range(n))
    return math.factorial(n - 1) * math.exp(-x) * acc


def zeta_formal_series(s: float, N: int) -> tuple[float, list[float]]:
    """Partial sum and raw terms of the formal Bernoulli/rising-factorial
    series for zeta: -1/(s-1) + sum_{n<N} B_{n+1} (-1)^(n+1)/(n+1)! s^(rising n).

    Makes no convergence claim: the terms eventually grow, and desk
    evaluation shows the partial sums do not approach zeta(s). Callers
    inspect the terms to locate the minimal-term truncation.
    """
    if N < 1:
        raise ValueError("need N >= 1 terms")
    if s == 1:
        raise ValueError("pole at s = 1")
    terms = []
    for n in range(N):
        b = bernoulli(n + 1)
        w = Fraction((-1) ** (n + 1)) * b / math.factorial(n + 1)
        terms.append(float(w) * rising_factorial(float(s), n))
    return -1.0 / (s - 1.0) + math.fsum(terms), terms
