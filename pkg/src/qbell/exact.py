"""Exact scalars, dense polynomials in q, and rational interval arithmetic.

Rationals are :class:`fractions.Fraction`, which already keeps values in
lowest terms with a positive denominator.  Integers are plain ``int``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    return math.factorial(n)


def format_rational(x: Fraction) -> str:
    """Serialize as "num/den", keeping the denominator even when it is 1."""
    return f"{x.numerator}/{x.denominator}"


class QPolynomial:
    """Dense univariate polynomial in ``q`` with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``q**i``.  Trailing zeros are
    stripped on construction, so the zero polynomial is ``(0,)`` and
    equality is plain tuple comparison.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = (0,)):
        cs = [as_rational(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: Scalar) -> QPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> QPolynomial:
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [c])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        if self.is_zero():
            return -1
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return len(self._coeffs) == 1 and self._coeffs[0] == 0

    def is_constant(self) -> bool:
        return len(self._coeffs) == 1

    def __call__(self, q0: Scalar) -> Fraction:
        return qpoly_eval(self, q0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = QPolynomial.constant(other)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"QPolynomial({[format_rational(c) if c.denominator != 1 else c.numerator for c in self._coeffs]})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def _coerce(self, other) -> QPolynomial:
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return qpoly_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> QPolynomial:
        return QPolynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return qpoly_add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return qpoly_add(other, -self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return qpoly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPolynomial:
        if k < 0:
            raise ValueError("negative exponent")
        result, base = QPolynomial.constant(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


QZERO = QPolynomial((0,))
QONE = QPolynomial((1,))
Q = QPolynomial((0, 1))


def qpoly_add(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    x, y = a.coeffs, b.coeffs
    if len(x) < len(y):
        x, y = y, x
    return QPolynomial([c + (y[i] if i < len(y) else 0) for i, c in enumerate(x)])


def qpoly_mul(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    if a.is_zero() or b.is_zero():
        return QZERO
    x, y = a.coeffs, b.coeffs
    out = [Fraction(0)] * (len(x) + len(y) - 1)
    for i, ci in enumerate(x):
        if ci == 0:
            continue
        for j, cj in enumerate(y):
            out[i + j] += ci * cj
    return QPolynomial(out)


def qpoly_eval(p: QPolynomial, q0: Scalar) -> Fraction:
    """Horner evaluation at an exact rational point."""
    q0 = as_rational(q0)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * q0 + c
    return acc


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval ``[lo, hi]`` with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = as_rational(self.lo), as_rational(self.hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, x: Scalar) -> RationalInterval:
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        x = as_rational(x)
        return self.lo <= x <= self.hi

    def contains_interval(self, other: RationalInterval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def integers(self) -> range:
        """All integers lying in the interval."""
        return range(math.ceil(self.lo), math.floor(self.hi) + 1)

    def __add__(self, other: RationalInterval) -> RationalInterval:
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    def __mul__(self, other: RationalInterval) -> RationalInterval:
        return interval_mul(self, other)

    def __str__(self) -> str:
        return f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"


def interval_mul(a: RationalInterval, b: RationalInterval) -> RationalInterval:
    products = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
    return RationalInterval(min(products), max(products))


def _alternating_partial_sum(m: int) -> Fraction:
    # sum_{k=0}^m (-1)^k / k!, accumulated over the common denominator m!
    num, term = 0, 1
    for k in range(m, -1, -1):
        num += term if k % 2 == 0 else -term
        term *= k if k else 1
    return Fraction(num, factorial(m))


def e_inverse_bracket(K: int) -> RationalInterval:
    """Enclosure of ``1/e`` from two consecutive alternating partial sums.

    The result has width exactly ``1/(K+1)!`` and brackets ``1/e`` strictly.
    """
    if K < 1:
        raise ValueError("K must be at least 1")
    s_k = _alternating_partial_sum(K)
    s_next = s_k + Fraction((-1) ** (K + 1), factorial(K + 1))
    return RationalInterval(min(s_k, s_next), max(s_k, s_next))
