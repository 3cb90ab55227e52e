"""Truncated power series with exact rational coefficients.

Used for the necessary condition on complex affine Hopf fibrations of
``C^n`` with ``p``-dimensional fibers: every coefficient of ``t^r``,
``0 <= r <= p``, of ``(t / ln(1 + t))^(n - p)`` must be an integer.
Only ``p + 1`` coefficients ever matter, so everything is truncated at
order ``p`` up front.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DomainError

DEFAULT_SEARCH_LIMIT = 10_000


@dataclass(frozen=True)
class TruncatedRationalSeries:
    """Coefficients of ``t^0 .. t^order``; ``coeffs[k]`` belongs to ``t^k``."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def of(cls, coeffs: Iterable) -> "TruncatedRationalSeries":
        return cls(tuple(coeffs))

    @classmethod
    def one(cls, order: int) -> "TruncatedRationalSeries":
        return cls((Fraction(1),) + (Fraction(0),) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def truncate(self, order: int) -> "TruncatedRationalSeries":
        if order > self.order:
            raise DomainError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedRationalSeries(self.coeffs[: order + 1])

    def __add__(self, other: "TruncatedRationalSeries") -> "TruncatedRationalSeries":
        k = min(self.order, other.order)
        return TruncatedRationalSeries(tuple(a + b for a, b in zip(self.coeffs[: k + 1], other.coeffs)))

    def __mul__(self, other):
        if not isinstance(other, TruncatedRationalSeries):
            return TruncatedRationalSeries(tuple(c * other for c in self.coeffs))
        k = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return TruncatedRationalSeries(
            tuple(sum(a[i] * b[d - i] for i in range(d + 1)) for d in range(k + 1))
        )

    __rmul__ = __mul__

    def reciprocal(self) -> "TruncatedRationalSeries":
        a = self.coeffs
        if a[0] == 0:
            raise DomainError("series with zero constant term has no reciprocal")
        out = [1 / a[0]]
        for d in range(1, len(a)):
            out.append(-sum(a[i] * out[d - i] for i in range(1, d + 1)) / a[0])
        return TruncatedRationalSeries(tuple(out))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedRationalSeries([{', '.join(str(c) for c in self.coeffs)}])"


def log1p_over_t(order: int) -> TruncatedRationalSeries:
    """``ln(1 + t) / t = sum (-1)^k t^k / (k + 1)``."""
    if order < 0:
        raise DomainError("order must be >= 0")
    return TruncatedRationalSeries(tuple(Fraction((-1) ** k, k + 1) for k in range(order + 1)))


def base_series(order: int) -> TruncatedRationalSeries:
    """``t / ln(1 + t)`` up to ``t^order``."""
    return log1p_over_t(order).reciprocal()


def series_pow(s: TruncatedRationalSeries, m: int) -> TruncatedRationalSeries:
    """``s^m`` by binary exponentiation; ``s`` must have constant term 1."""
    if s[0] != 1:
        raise DomainError(f"series_pow needs a unit constant term, got {s[0]}")
    if m < 0:
        raise DomainError(f"exponent must be >= 0, got {m}")
    result = TruncatedRationalSeries.one(s.order)
    while m:
        if m & 1:
            result = result * s
        m >>= 1
        if m:
            s = s * s
    return result


def complex_condition_holds(p: int, n: int) -> bool:
    """Integrality test on ``(t / ln(1+t))^(n-p)`` through ``t^p``.

    Necessary, not sufficient: ``False`` rules out a complex fibration,
    ``True`` does not construct one.
    """
    if p < 1:
        raise DomainError(f"p must be >= 1, got {p}")
    if n <= p:
        raise DomainError(f"n={n} must exceed p={p}")
    return series_pow(base_series(p), n - p).is_integral()


def min_complex_ambient(p: int, search_limit: int = DEFAULT_SEARCH_LIMIT) -> int | None:
    """Smallest ``n`` in ``(p, search_limit]`` passing the integrality test, else ``None``.

    A lower bound for the ambient dimension, not a proof of existence.
    """
    if p < 1:
        raise DomainError(f"p must be >= 1, got {p}")
    base = base_series(p)
    power = TruncatedRationalSeries.one(p)
    for n in range(p + 1, search_limit + 1):
        power = power * base  # base^(n - p)
        if power.is_integral():
            return n
    return None
