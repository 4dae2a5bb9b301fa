"""Multi-basis polynomial arithmetic and the finite operator calculus.

A BasisPolynomial stores exact rational coefficients against one of three
bases: monomial x^n, falling factorial (x)_n, rising factorial x^(rising n).
Operators (derivative, forward/backward difference, shifts, the formal series
log(1+d), e^D - 1, (1+d)^a, e^{aD}, a^{x nabla}) act exactly; every formal
series terminates because d and D are nilpotent on polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Union

from .combinatorics import (
    binomial_general,
    falling_factorial,
    rising_factorial,
    stirling_first_signed,
    stirling_first_unsigned,
    stirling_second,
)

Scalar = Union[Fraction, int, float]


class Basis(str, Enum):
    MONOMIAL = "monomial"
    FALLING = "falling"
    RISING = "rising"


class BasisMismatchError(ValueError):
    pass


def _normalize(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class BasisPolynomial:
    """Finite coefficient vector tagged with a basis; canonical form.

    coeffs[n] multiplies the n-th basis element; trailing zeros are stripped
    so equality is structural equality. The zero polynomial has no coeffs.
    """

    basis: Basis
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "basis", Basis(self.basis))
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    @property
    def degree(self) -> int:
        # degree of the zero polynomial is -1 by convention here
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, n: int) -> Fraction:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else Fraction(0)

    def eval(self, x: Scalar) -> Scalar:
        """Value at x; exact when x is Fraction/int, float when x is float."""
        if isinstance(x, float):
            acc, basis_val = 0.0, 1.0
        else:
            x = Fraction(x)
            acc, basis_val = Fraction(0), Fraction(1)
        for n, c in enumerate(self.coeffs):
            if n > 0:
                if self.basis is Basis.MONOMIAL:
                    basis_val = basis_val * x
                elif self.basis is Basis.FALLING:
                    basis_val = basis_val * (x - (n - 1))
                else:
                    basis_val = basis_val * (x + (n - 1))
            if isinstance(x, float):
                acc += float(c) * basis_val
            else:
                acc += c * basis_val
        return acc

    def __add__(self, other: "BasisPolynomial") -> "BasisPolynomial":
        if self.basis is not other.basis:
            raise BasisMismatchError("cannot add polynomials in different bases")
        n = max(len(self.coeffs), len(other.coeffs))
        return BasisPolynomial(self.basis, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "BasisPolynomial") -> "BasisPolynomial":
        return self + other.scale(Fraction(-1))

    def scale(self, c: Scalar) -> "BasisPolynomial":
        c = Fraction(c)
        return BasisPolynomial(self.basis, [c * a for a in self.coeffs])

    def to_json(self) -> dict:
        return {"basis": self.basis.value, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "BasisPolynomial":
        if not isinstance(obj, dict) or set(obj) != {"basis", "coeffs"}:
            raise ValueError("polynomial JSON must have exactly 'basis' and 'coeffs'")
        try:
            basis = Basis(obj["basis"])
        except ValueError:
            raise ValueError(f"unknown basis {obj['basis']!r}") from None
        coeffs = obj["coeffs"]
        if not isinstance(coeffs, list) or not all(isinstance(c, str) for c in coeffs):
            raise ValueError("'coeffs' must be a list of rational strings")
        try:
            parsed = [Fraction(c) for c in coeffs]
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational coefficient: {exc}") from None
        return cls(basis, parsed)


def poly(basis: Basis | str, coeffs: Iterable) -> BasisPolynomial:
    return BasisPolynomial(Basis(basis), coeffs)


def monomial(coeffs: Iterable) -> BasisPolynomial:
    return BasisPolynomial(Basis.MONOMIAL, coeffs)


def falling_unit(n: int) -> BasisPolynomial:
    """The basis element (x)_n as a falling-basis polynomial."""
    return BasisPolynomial(Basis.FALLING, [0] * n + [1])


def convert_basis(p: BasisPolynomial, target: Basis | str) -> BasisPolynomial:
    """Re-express p in the target basis; exact, round trips are identities."""
    target = Basis(target)
    if p.basis is target:
        return p
    if p.basis is Basis.MONOMIAL:
        return _from_monomial(p, target)
    mono = _to_monomial(p)
    return mono if target is Basis.MONOMIAL else _from_monomial(mono, target)


def _to_monomial(p: BasisPolynomial) -> BasisPolynomial:
    d = p.degree
    out = [Fraction(0)] * (d + 1)
    if p.basis is Basis.FALLING:
        # (x)_n = sum_k s(n,k) x^k with signed Stirling numbers
        for n, a in enumerate(p.coeffs):
            if a:
                for k in range(n + 1):
                    out[k] += a * stirling_first_signed(n, k)
    else:
        # x^(rising n) = sum_k c(n,k) x^k
        for n, a in enumerate(p.coeffs):
            if a:
                for k in range(n + 1):
                    out[k] += a * stirling_first_unsigned(n, k)
    return BasisPolynomial(Basis.MONOMIAL, out)


def _from_monomial(p: BasisPolynomial, target: Basis) -> BasisPolynomial:
    d = p.degree
    out = [Fraction(0)] * (d + 1)
    if target is Basis.FALLING:
        # x^n = sum_k S(n,k) (x)_k
        for n, a in enumerate(p.coeffs):
            if a:
                for k in range(n + 1):
                    out[k] += a * stirling_second(n, k)
    else:
        # x^n = sum_k (-1)^(n-k) S(n,k) x^(rising k)
        for n, a in enumerate(p.coeffs):
            if a:
                for k in range(n + 1):
                    s = stirling_second(n, k)
                    out[k] += a * (s if (n - k) % 2 == 0 else -s)
    return BasisPolynomial(target, out)


def negate_argument(p: BasisPolynomial) -> BasisPolynomial:
    """Polynomial representing x -> p(-x).

    Monomial stays monomial; falling input yields a rising-basis result and
    vice versa, via x^(rising n) = (-1)^n (-x)_n.
    """
    flipped = [(-1) ** n * c for n, c in enumerate(p.coeffs)]
    if p.basis is Basis.MONOMIAL:
        return BasisPolynomial(Basis.MONOMIAL, flipped)
    other = Basis.RISING if p.basis is Basis.FALLING else Basis.FALLING
    return BasisPolynomial(other, flipped)


def shift(p: BasisPolynomial, a: Scalar) -> BasisPolynomial:
    """q with q(x) = p(x+a), returned in the basis of p."""
    a = Fraction(a)
    if a == 0:
        return p
    mono = convert_basis(p, Basis.MONOMIAL)
    d = mono.degree
    out = [Fraction(0)] * (d + 1)
    for n, c in enumerate(mono.coeffs):
        if c:
            pw = Fraction(1)
            for k in range(n, -1, -1):
                out[k] += c * math.comb(n, k) * pw
                pw *= a
    return convert_basis(BasisPolynomial(Basis.MONOMIAL, out), p.basis)


def scale_argument(p: BasisPolynomial, a: Scalar) -> BasisPolynomial:
    """q with q(x) = p(a*x), returned in the basis of p."""
    a = Fraction(a)
    mono = convert_basis(p, Basis.MONOMIAL)
    out = []
    pw = Fraction(1)
    for c in mono.coeffs:
        out.append(c * pw)
        pw *= a
    return convert_basis(BasisPolynomial(Basis.MONOMIAL, out), p.basis)


def multiply(p: BasisPolynomial, q: BasisPolynomial) -> BasisPolynomial:
    """Exact product of two polynomials given in the same basis.

    Monomial: coefficient convolution. Falling: the linearization
    (x)_n (x)_m = sum_k binom(n,k) binom(m,k) k! (x)_{n+m-k}. Rising: by
    reflection through the falling rule.
    """
    if p.basis is not q.basis:
        raise BasisMismatchError("multiply requires operands in the same basis")
    if p.is_zero() or q.is_zero():
        return BasisPolynomial(p.basis, [])
    if p.basis is Basis.MONOMIAL:
        out = [Fraction(0)] * (p.degree + q.degree + 1)
        for i, a in enumerate(p.coeffs):
            if a:
                for j, b in enumerate(q.coeffs):
                    if b:
                        out[i + j] += a * b
        return BasisPolynomial(Basis.MONOMIAL, out)
    if p.basis is Basis.FALLING:
        return _multiply_falling(p, q)
    pf = negate_argument(p)
    qf = negate_argument(q)
    return negate_argument(_multiply_falling(pf, qf))


def _multiply_falling(p: BasisPolynomial, q: BasisPolynomial) -> BasisPolynomial:
    out = [Fraction(0)] * (p.degree + q.degree + 1)
    for n, a in enumerate(p.coeffs):
        if not a:
            continue
        for m, b in enumerate(q.coeffs):
            if not b:
                continue
            ab = a * b
            for k in range(min(n, m) + 1):
                w = math.comb(n, k) * math.comb(m, k) * math.factorial(k)
                out[n + m - k] += ab * w
    return BasisPolynomial(Basis.FALLING, out)


# --- operator calculus -----------------------------------------------------


class OperatorKind(str, Enum):
    DERIVATIVE = "derivative"
    FORWARD_DIFFERENCE = "forward_difference"
    BACKWARD_DIFFERENCE = "backward_difference"
    SHIFT = "shift"
    LOG1P_DERIVATIVE = "log1p_derivative"
    EXPDIFF_MINUS1 = "expdiff_minus1"
    BINOM_SHIFT = "binom_shift"  # (1 + d/dx)^a
    EXP_SHIFT = "exp_shift"  # e^{a * forward difference}
    SCALE_OP = "scale_op"  # a^{x * backward difference}


_POWER_KINDS = {
    OperatorKind.DERIVATIVE,
    OperatorKind.FORWARD_DIFFERENCE,
    OperatorKind.BACKWARD_DIFFERENCE,
    OperatorKind.LOG1P_DERIVATIVE,
    OperatorKind.EXPDIFF_MINUS1,
}
_PARAM_KINDS = {
    OperatorKind.SHIFT,
    OperatorKind.BINOM_SHIFT,
    OperatorKind.EXP_SHIFT,
    OperatorKind.SCALE_OP,
}


@dataclass(frozen=True)
class OperatorExpr:
    kind: OperatorKind
    k: int = 1
    a: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", OperatorKind(self.kind))
        if self.kind in _POWER_KINDS:
            if self.k < 0:
                raise ValueError(f"{self.kind.value} power must be nonnegative")
            if self.a is not None:
                raise ValueError(f"{self.kind.value} takes no parameter")
        else:
            if self.a is None:
                raise ValueError(f"{self.kind.value} requires parameter a")
            object.__setattr__(self, "a", Fraction(self.a))


def derivative(k: int = 1) -> OperatorExpr:
    return OperatorExpr(OperatorKind.DERIVATIVE, k=k)


def forward_difference(k: int = 1) -> OperatorExpr:
    return OperatorExpr(OperatorKind.FORWARD_DIFFERENCE, k=k)


def backward_difference(k: int = 1) -> OperatorExpr:
    return OperatorExpr(OperatorKind.BACKWARD_DIFFERENCE, k=k)


def shift_op(a: Scalar) -> OperatorExpr:
    return OperatorExpr(OperatorKind.SHIFT, a=Fraction(a))


def log1p_derivative(k: int = 1) -> OperatorExpr:
    return OperatorExpr(OperatorKind.LOG1P_DERIVATIVE, k=k)


def expdiff_minus1(k: int = 1) -> OperatorExpr:
    return OperatorExpr(OperatorKind.EXPDIFF_MINUS1, k=k)


def binom_shift(a: Scalar) -> OperatorExpr:
    return OperatorExpr(OperatorKind.BINOM_SHIFT, a=Fraction(a))


def exp_shift(a: Scalar) -> OperatorExpr:
    return OperatorExpr(OperatorKind.EXP_SHIFT, a=Fraction(a))


def scale_op(a: Scalar) -> OperatorExpr:
    return OperatorExpr(OperatorKind.SCALE_OP, a=Fraction(a))


def _lower_once(coeffs: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    # shared diagonal action: d(x^n) = n x^(n-1) and D((x)_n) = n (x)_(n-1)
    return tuple(Fraction(n) * coeffs[n] for n in range(1, len(coeffs)))


def _apply_series(coeffs: tuple[Fraction, ...], weights: Callable[[int], Fraction],
                  include_identity: Fraction | None) -> tuple[Fraction, ...]:
    """sum_j weights(j) * D^j applied to coeffs in the diagonal basis.

    include_identity, when given, is the j = 0 weight.
    """
    acc = [Fraction(0)] * len(coeffs)
    if include_identity is not None and include_identity != 0:
        acc = [include_identity * c for c in coeffs]
    cur = coeffs
    j = 1
    while len(cur) > 0 and j <= len(coeffs):
        cur = _lower_once(cur)
        w = weights(j)
        if w:
            for i, c in enumerate(cur):
                acc[i] += w * c
        j += 1
    return tuple(acc)


def apply_operator(op: OperatorExpr, p: BasisPolynomial) -> BasisPolynomial:
    """Apply op to p exactly; the result is returned in the basis of p."""
    source = p.basis
    kind = op.kind
    if kind is OperatorKind.SHIFT:
        return shift(p, op.a)

    if kind in (OperatorKind.DERIVATIVE, OperatorKind.LOG1P_DERIVATIVE,
                OperatorKind.BINOM_SHIFT):
        work = convert_basis(p, Basis.MONOMIAL)
    else:
        work = convert_basis(p, Basis.FALLING)
    c = work.coeffs

    if kind is OperatorKind.DERIVATIVE or kind is OperatorKind.FORWARD_DIFFERENCE:
        for _ in range(op.k):
            c = _lower_once(c)
    elif kind is OperatorKind.BACKWARD_DIFFERENCE:
        # nabla = forward difference composed with unit back-shift
        q = BasisPolynomial(Basis.FALLING, c)
        for _ in range(op.k):
            q = shift(BasisPolynomial(Basis.FALLING, _lower_once(q.coeffs)), Fraction(-1))
        c = q.coeffs
    elif kind is OperatorKind.LOG1P_DERIVATIVE:
        for _ in range(op.k):
            c = _apply_series(c, lambda j: Fraction((-1) ** (j + 1), j), None)
    elif kind is OperatorKind.EXPDIFF_MINUS1:
        for _ in range(op.k):
            c = _apply_series(c, lambda j: Fraction(1, math.factorial(j)), None)
    elif kind is OperatorKind.BINOM_SHIFT:
        a = op.a
        c = _apply_series(c, lambda j: binomial_general(a, j), Fraction(1))
    elif kind is OperatorKind.EXP_SHIFT:
        a = op.a
        c = _apply_series(c, lambda j: a ** j / math.factorial(j), Fraction(1))
    elif kind is OperatorKind.SCALE_OP:
        # a^{x nabla} = sum_k (a-1)^k / k! * (x)_k nabla^k  (finite on polynomials)
        base = BasisPolynomial(Basis.FALLING, c)
        acc = base
        cur = base
        for k in range(1, len(c)):
            cur = apply_operator(backward_difference(1), cur)
            if cur.is_zero():
                break
            w = (op.a - 1) ** k / math.factorial(k)
            if w:
                acc = acc + _multiply_falling(falling_unit(k), cur).scale(w)
        c = acc.coeffs
    else:  # pragma: no cover
        raise ValueError(f"unknown operator kind {kind}")

    out_basis = Basis.MONOMIAL if kind in (
        OperatorKind.DERIVATIVE, OperatorKind.LOG1P_DERIVATIVE, OperatorKind.BINOM_SHIFT
    ) else Basis.FALLING
    return convert_basis(BasisPolynomial(out_basis, c), source)


# --- indefinite (inverse) operators ----------------------------------------
#
# Used by the kernel-relative integration/summation checks. Each inverse
# fixes the kernel ambiguity by choosing the preimage with zero constant term.


def antiderivative(p: BasisPolynomial) -> BasisPolynomial:
    """d^{-1} p with zero constant of integration."""
    mono = convert_basis(p, Basis.MONOMIAL)
    out = [Fraction(0)] + [c / (n + 1) for n, c in enumerate(mono.coeffs)]
    return convert_basis(BasisPolynomial(Basis.MONOMIAL, out), p.basis)


def indefinite_sum(p: BasisPolynomial) -> BasisPolynomial:
    """D^{-1} p (forward-difference preimage) vanishing at x = 0."""
    fall = convert_basis(p, Basis.FALLING)
    out = [Fraction(0)] + [c / (n + 1) for n, c in enumerate(fall.coeffs)]
    return convert_basis(BasisPolynomial(Basis.FALLING, out), p.basis)


def _solve_series_inverse(p: BasisPolynomial, weights: Callable[[int], Fraction],
                          work_basis: Basis) -> BasisPolynomial:
    """Solve L q = p for q with q(0-coefficient) = 0, L = sum_{j>=1} w_j D^j.

    Triangular back-substitution using D^j(b_{m+j}) = (m+j)_j b_m in the
    diagonal basis. Requires w_1 != 0.
    """
    src = convert_basis(p, work_basis)
    d = src.degree
    q = [Fraction(0)] * (d + 2)
    w1 = weights(1)
    for m in range(d, -1, -1):
        acc = src.coeff(m)
        for j in range(2, d + 2 - m):
            acc -= weights(j) * falling_factorial(Fraction(m + j), j) * q[m + j]
        q[m + 1] = acc / (w1 * (m + 1))
    return convert_basis(BasisPolynomial(work_basis, q), p.basis)


def log1p_derivative_inverse(p: BasisPolynomial) -> BasisPolynomial:
    """(log(1+d))^{-1} p, normalized to zero constant term."""
    return _solve_series_inverse(p, lambda j: Fraction((-1) ** (j + 1), j), Basis.MONOMIAL)


def expdiff_minus1_inverse(p: BasisPolynomial) -> BasisPolynomial:
    """(e^D - 1)^{-1} p, normalized to zero constant term."""
    return _solve_series_inverse(p, lambda j: Fraction(1, math.factorial(j)), Basis.FALLING)
