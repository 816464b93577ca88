"""Truncated formal power series in one variable with exact rational coefficients.

A :class:`TruncSeries` keeps the coefficients of ``t^0 .. t^order`` and
nothing else.  The truncation order is part of the value: binary operations
require equal orders and never resize silently.  Coefficients are
``fractions.Fraction``; exactness is an invariant of the whole library.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"exact coefficient expected, got {type(x).__name__}")


@dataclass(frozen=True)
class TruncSeries:
    """Polynomial truncation of a formal power series in t."""

    order: int
    coeffs: tuple

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [_frac(c) for c in coeffs]
        if len(cs) > order + 1:
            raise ValueError(f"{len(cs)} coefficients for order {order}")
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls(order, (1,))

    @classmethod
    def monomial(cls, order: int, k: int, coeff=1) -> "TruncSeries":
        """The series coeff * t^k."""
        if not 0 <= k <= order:
            raise ValueError("exponent out of range")
        return cls(order, [0] * k + [coeff])

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def _check_order(self, other: "TruncSeries"):
        if self.order != other.order:
            raise ValueError(
                f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_order(other)
        return TruncSeries(self.order,
                           [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_order(other)
        return TruncSeries(self.order,
                           [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.order, [-a for a in self.coeffs])

    def scale(self, c) -> "TruncSeries":
        c = _frac(c)
        return TruncSeries(self.order, [c * a for a in self.coeffs])

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        """Cauchy product truncated at the common order."""
        self._check_order(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncSeries(n, out)

    def __truediv__(self, other: "TruncSeries") -> "TruncSeries":
        """Quotient q with q * other == self up to the truncation order."""
        self._check_order(other)
        if other.coeffs[0] == 0:
            raise ZeroDivisionError("division by series with zero constant term")
        n = self.order
        inv0 = 1 / other.coeffs[0]
        out = [Fraction(0)] * (n + 1)
        for k in range(n + 1):
            s = self.coeffs[k]
            for j in range(1, k + 1):
                if other.coeffs[j] != 0:
                    s -= other.coeffs[j] * out[k - j]
            out[k] = s * inv0
        return TruncSeries(n, out)

    def exp(self) -> "TruncSeries":
        """exp of a series with zero constant term.

        Uses the derivative recurrence f' = a' f, which keeps every step
        rational: n f_n = sum_{k=1..n} k a_k f_{n-k}.
        """
        if self.coeffs[0] != 0:
            raise ValueError("exp requires zero constant term")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = Fraction(1)
        for m in range(1, n + 1):
            s = Fraction(0)
            for k in range(1, m + 1):
                if self.coeffs[k] != 0:
                    s += k * self.coeffs[k] * out[m - k]
            out[m] = s / m
        return TruncSeries(n, out)

    def shift_down(self, k: int) -> "TruncSeries":
        """Exact division by t^k; the low k coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise ValueError(f"series is not divisible by t^{k}")
        return TruncSeries(self.order - k, self.coeffs[k:])

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{k}")
        return " + ".join(parts) if parts else "0"


def geometric_inverse_square(order: int) -> TruncSeries:
    """1/(1-t)^2 = sum (m+1) t^m, the zeta function of the 2-sphere flow."""
    return TruncSeries(order, [m + 1 for m in range(order + 1)])


def series_det(entries: Sequence[Sequence[TruncSeries]], order: int) -> TruncSeries:
    """Determinant of a small matrix of truncated series (Leibniz expansion)."""
    from itertools import permutations

    n = len(entries)
    out = TruncSeries.zero(order)
    if n == 0:
        return TruncSeries.one(order)
    from .linalg import perm_parity

    for perm in permutations(range(n)):
        sign = -1 if perm_parity(perm) else 1
        prod = TruncSeries.one(order)
        for i in range(n):
            prod = prod * entries[i][perm[i]]
        out = out + (prod if sign == 1 else -prod)
    return out
