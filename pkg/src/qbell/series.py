"""Truncated power series over the rationals and the Bell-number EGF."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .exact import Scalar, as_rational, factorial


class IntegralityError(ArithmeticError):
    """A coefficient that must be an integer came out fractional."""


class PowerSeries:
    """``a_0 + a_1 x + ... + a_N x^N + O(x^(N+1))``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        cs = [as_rational(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            raise ValueError("a power series needs at least one coefficient")
        self._coeffs = tuple(cs)

    @classmethod
    def exponential(cls, order: int) -> PowerSeries:
        return cls([Fraction(1, factorial(i)) for i in range(order + 1)])

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, i: int) -> Fraction:
        return self._coeffs[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"PowerSeries({[str(c) for c in self._coeffs]})"

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return PowerSeries(self._coeffs[: order + 1])

    def __add__(self, other: PowerSeries) -> PowerSeries:
        n = min(self.order, other.order)
        return PowerSeries(self[i] + other[i] for i in range(n + 1))

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        n = min(self.order, other.order)
        return PowerSeries(self[i] - other[i] for i in range(n + 1))

    def __mul__(self, other: PowerSeries) -> PowerSeries:
        return series_mul(self, other)

    def derivative(self) -> PowerSeries:
        """Formal derivative; the order drops by one (order 0 gives ``0``)."""
        if self.order == 0:
            return PowerSeries([0])
        return PowerSeries(i * self[i] for i in range(1, self.order + 1))


def series_mul(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    n = min(f.order, g.order)
    return PowerSeries(
        sum((f[i] * g[m - i] for i in range(m + 1)), Fraction(0)) for m in range(n + 1)
    )


def series_exp(f: PowerSeries) -> PowerSeries:
    """``exp(f)`` for ``f(0) == 0``, via ``g' = f' g``."""
    if f[0] != 0:
        raise ValueError("series_exp needs a zero constant term")
    g = [Fraction(1)]
    for m in range(1, f.order + 1):
        acc = sum((i * f[i] * g[m - i] for i in range(1, m + 1)), Fraction(0))
        g.append(acc / m)
    return PowerSeries(g)


def bell_egf(N: int) -> PowerSeries:
    """``exp(e^x - 1)`` to order ``N``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    e = PowerSeries.exponential(N)
    return series_exp(e - PowerSeries([1], order=N))


def egf_coefficients_to_integers(f: PowerSeries) -> list[int]:
    out = []
    for n, a in enumerate(f.coeffs):
        v = a * factorial(n)
        if v.denominator != 1:
            raise IntegralityError(f"n!*a_n is not an integer at n={n}: {v}")
        out.append(v.numerator)
    return out


def egf_extract_bell(N: int) -> list[int]:
    """``(0! a_0, ..., N! a_N)`` for the Bell EGF."""
    return egf_coefficients_to_integers(bell_egf(N))

