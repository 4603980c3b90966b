"""Truncated formal power series with exact integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import InvalidInput
from .paths import catalan

DEFAULT_TERMS = 25


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients c_0 .. c_{order-1}; everything past ``order`` is unknown."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if any(not isinstance(c, int) or isinstance(c, bool) for c in coeffs):
            raise InvalidInput("coefficients must be integers")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < self.order else 0

    def truncate(self, order: int) -> "PowerSeries":
        c = self.coeffs[:order]
        return PowerSeries(c + (0,) * (order - len(c)))

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        return add(self, other)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        return multiply(self, other)


def from_coeffs(coeffs: Sequence[int]) -> PowerSeries:
    return PowerSeries(tuple(coeffs))


def x_series(order: int) -> PowerSeries:
    return PowerSeries(tuple(1 if i == 1 else 0 for i in range(order)))


def add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    order = min(a.order, b.order)
    return PowerSeries(tuple(a[i] + b[i] for i in range(order)))


def multiply(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    order = min(a.order, b.order)
    out = [0] * order
    for i in range(order):
        ai = a[i]
        if ai:
            for j in range(order - i):
                out[i + j] += ai * b[j]
    return PowerSeries(tuple(out))


def shift(a: PowerSeries, by: int = 1) -> PowerSeries:
    """x^by * a, keeping the same order."""
    return PowerSeries((0,) * by + a.coeffs[:a.order - by])


def compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """outer(inner(x)); the inner series must have zero constant term."""
    if inner[0] != 0:
        raise InvalidInput("compose needs an inner series with zero constant term")
    order = min(outer.order, inner.order)
    # Horner: outer_0 + inner * (outer_1 + inner * (...))
    acc = PowerSeries((0,) * order)
    inner = inner.truncate(order)
    for c in reversed(outer.coeffs[:order]):
        acc = multiply(acc, inner)
        acc = PowerSeries((acc[0] + c,) + acc.coeffs[1:])
    return acc


def substitute_x_squared(a: PowerSeries, order: int | None = None) -> PowerSeries:
    """a(x^2), to ``order`` terms (default: the same order as ``a``)."""
    order = a.order if order is None else order
    out = [0] * order
    for i in range(order):
        if i % 2 == 0 and i // 2 < a.order:
            out[i] = a[i // 2]
    return PowerSeries(tuple(out))


def catalan_series(terms: int = DEFAULT_TERMS) -> PowerSeries:
    return PowerSeries(tuple(catalan(k) for k in range(terms)))


def b_series(terms: int = DEFAULT_TERMS) -> PowerSeries:
    """B(x) = C(x C(x))."""
    c = catalan_series(terms)
    return compose(c, shift(c))


def btilde_series(terms: int = DEFAULT_TERMS, b: PowerSeries | None = None) -> PowerSeries:
    """x B(x^2): B's coefficients moved to the odd exponents."""
    b = b_series((terms + 1) // 2) if b is None else b
    return shift(substitute_x_squared(b, terms))


def check_btilde_identity(terms: int = DEFAULT_TERMS, btilde: PowerSeries | None = None) -> bool:
    """Check Bt = x + x C(x^2) Bt^2 coefficientwise below x^terms."""
    if terms < 2:
        raise InvalidInput("need at least two terms")
    bt = btilde_series(terms) if btilde is None else btilde.truncate(terms)
    c2 = substitute_x_squared(catalan_series(terms), terms)
    rhs = add(x_series(terms), shift(multiply(c2, multiply(bt, bt))))
    return rhs.coeffs == bt.coeffs


def sum_identity_lhs(k: int) -> int:
    return sum(j * catalan(j - 1) * catalan(k - j) for j in range(1, k + 1))


def check_sum_identity(k: int) -> bool:
    """sum_{j=1}^k j C_{j-1} C_{k-j} == C(2k-1, k)."""
    if k < 1:
        raise InvalidInput("k must be at least 1")
    return sum_identity_lhs(k) == comb(2 * k - 1, k)


SERIES = {
    "catalan": catalan_series,
    "b": b_series,
    "btilde": btilde_series,
}
