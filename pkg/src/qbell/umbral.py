"""Polynomials in the umbral variable X, the falling-factorial basis, and
linear functionals defined by their values on that basis."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence, Union

from .exact import QONE, QZERO, QPolynomial, Scalar, as_rational, factorial

Coefficient = Union[QPolynomial, int, Fraction]


def _as_qpoly(c: Coefficient) -> QPolynomial:
    if isinstance(c, QPolynomial):
        return c
    return QPolynomial.constant(as_rational(c))


class XPolynomial:
    """Dense polynomial in ``X`` whose coefficients are :class:`QPolynomial`.

    ``coeffs[i]`` multiplies ``X**i``; trailing zero coefficients are dropped.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Coefficient] = (0,)):
        cs = [_as_qpoly(c) for c in coeffs]
        while len(cs) > 1 and cs[-1].is_zero():
            cs.pop()
        self._coeffs = tuple(cs) if cs else (QZERO,)

    @classmethod
    def x_power(cls, n: int) -> XPolynomial:
        """The monomial ``X**n``."""
        return cls([0] * n + [1])

    @property
    def coeffs(self) -> tuple[QPolynomial, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        if self.is_zero():
            return -1
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return len(self._coeffs) == 1 and self._coeffs[0].is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, XPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"XPolynomial({list(self._coeffs)!r})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self._coeffs):
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if not mono:
                parts.append(f"({c})")
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __add__(self, other: XPolynomial) -> XPolynomial:
        if not isinstance(other, XPolynomial):
            return NotImplemented
        x, y = self._coeffs, other._coeffs
        if len(x) < len(y):
            x, y = y, x
        return XPolynomial([c + y[i] if i < len(y) else c for i, c in enumerate(x)])

    def __neg__(self) -> XPolynomial:
        return XPolynomial([-c for c in self._coeffs])

    def __sub__(self, other: XPolynomial) -> XPolynomial:
        if not isinstance(other, XPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> XPolynomial:
        if isinstance(other, (QPolynomial, int, Fraction)):
            s = _as_qpoly(other)
            return XPolynomial([c * s for c in self._coeffs])
        if not isinstance(other, XPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return XPolynomial()
        out = [QZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] = out[i + j] + a * b
        return XPolynomial(out)

    def __rmul__(self, other) -> XPolynomial:
        if isinstance(other, (QPolynomial, int, Fraction)):
            return self * other
        return NotImplemented

    def __call__(self, x0: Coefficient) -> QPolynomial:
        """Evaluate at ``X = x0`` (x0 may itself involve q)."""
        x0 = _as_qpoly(x0)
        acc = QZERO
        for c in reversed(self._coeffs):
            acc = acc * x0 + c
        return acc

    def substitute_q(self, q0: Scalar) -> XPolynomial:
        """Specialize every coefficient at ``q = q0``."""
        return XPolynomial([c(q0) for c in self._coeffs])


@lru_cache(maxsize=None)
def falling_poly(k: int) -> XPolynomial:
    """``X (X-1) ... (X-k+1)`` expanded in the monomial basis."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return XPolynomial([1])
    return falling_poly(k - 1) * XPolynomial([-(k - 1), 1])


def falling_coeffs(p: XPolynomial) -> list[QPolynomial]:
    """Coordinates of ``p`` in the falling-factorial basis.

    Uses Newton's forward-difference form at the nodes ``0..d``: the k-th
    coordinate is ``Δ^k p(0) / k!``.
    """
    d = max(p.degree, 0)
    diffs = [p(i) for i in range(d + 1)]
    out = []
    for k in range(d + 1):
        out.append(diffs[0] * Fraction(1, factorial(k)))
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
    return out


def from_falling_coeffs(coeffs: Sequence[Coefficient]) -> XPolynomial:
    """Inverse of :func:`falling_coeffs`."""
    total = XPolynomial()
    for k, c in enumerate(coeffs):
        total = total + falling_poly(k) * _as_qpoly(c)
    return total


@dataclass(frozen=True)
class UmbralFunctional:
    """Linear functional ``L`` fixed by ``moment(k) = L(X (X-1) ... (X-k+1))``.

    Moments are produced on demand, so no truncation order is baked in.
    """

    name: str
    _moment: Callable[[int], QPolynomial]

    def moment(self, k: int) -> QPolynomial:
        if k < 0:
            raise ValueError("moment index must be nonnegative")
        return self._moment(k)

    def moments(self, count: int) -> list[QPolynomial]:
        return [self.moment(k) for k in range(count)]

    def __call__(self, p: XPolynomial) -> QPolynomial:
        return apply_functional(self, p)


def rota_functional() -> UmbralFunctional:
    """The functional sending every falling factorial to 1."""
    return UmbralFunctional("rota", lambda k: QONE)


def poisson_functional(lam: Scalar) -> UmbralFunctional:
    """Expectation under Poisson(lam); the factorial moments are ``lam**k``."""
    lam = as_rational(lam)
    if lam < 0:
        raise ValueError(f"Poisson rate must be nonnegative, got {lam}")
    return UmbralFunctional(f"poisson({lam})", lambda k: QPolynomial.constant(lam**k))


def apply_functional(L: UmbralFunctional, p: XPolynomial) -> QPolynomial:
    total = QZERO
    for k, c in enumerate(falling_coeffs(p)):
        if not c.is_zero():
            total = total + c * L.moment(k)
    return total
