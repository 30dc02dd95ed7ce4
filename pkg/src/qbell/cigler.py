"""Cigler's q-Stirling numbers and the q-Bell polynomials built from them.

Everything here lives in the unshifted variable ``X``.  Cigler's expansion

    (x+1)(x+q)...(x+q^(n-1)) = sum_k {n,k}_q (x+1)(x)(x-1)...(x-k+2)

becomes, after ``x = X - 1``,

    X (X-1+q) (X-1+q^2) ... (X-1+q^(n-1)) = sum_k {n,k}_q X(X-1)...(X-k+1)

so ``{n,k}_q`` are the falling-factorial coordinates of ``xq_product(n)``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .exact import QONE, QZERO, Q, QPolynomial
from .umbral import XPolynomial, falling_coeffs, falling_poly

MAX_ORACLE_N = 16

_rows: list[tuple[QPolynomial, ...]] = [(QONE,)]
_lock = threading.Lock()


def xq_product(n: int) -> XPolynomial:
    """``X (X-1+q) (X-1+q^2) ... (X-1+q^(n-1))``; ``1`` when ``n == 0``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return XPolynomial([1])
    p = XPolynomial([0, 1])
    for i in range(1, n):
        p = p * XPolynomial([Q**i - 1, 1])
    return p


def _extend_rows(n: int) -> None:
    # Multiplying by (X - 1 + q^m) maps the k-th falling factorial F_k to
    # F_{k+1} + (k - 1 + q^m) F_k, since X F_k = F_{k+1} + k F_k.
    with _lock:
        while len(_rows) <= n:
            m = len(_rows) - 1
            prev = _rows[-1]
            qm = Q**m
            row = []
            for k in range(m + 2):
                left = prev[k - 1] if k >= 1 else QZERO
                right = (qm + (k - 1)) * prev[k] if k <= m else QZERO
                row.append(left + right)
            _rows.append(tuple(row))


def qstirling_row(n: int) -> tuple[QPolynomial, ...]:
    """``({n,0}_q, ..., {n,n}_q)`` from the three-term recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n >= len(_rows):
        _extend_rows(n)
    return _rows[n]


def cigler_qstirling(n: int, k: int) -> QPolynomial:
    if n < 0 or k < 0 or k > n:
        return QZERO
    return qstirling_row(n)[k]


@dataclass(frozen=True)
class QStirlingRow:
    n: int
    entries: tuple[QPolynomial, ...]

    def __getitem__(self, k: int) -> QPolynomial:
        return self.entries[k]

    def __len__(self) -> int:
        return len(self.entries)


def qstirling_oracle(n: int) -> QStirlingRow:
    """Row ``n`` by direct basis conversion of ``xq_product(n)``.

    Independent of the recurrence behind :func:`cigler_qstirling`.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_ORACLE_N:
        raise ValueError(f"oracle is capped at n={MAX_ORACLE_N}, got {n}")
    coeffs = falling_coeffs(xq_product(n))
    return QStirlingRow(n, tuple(coeffs) + (QZERO,) * (n + 1 - len(coeffs)))


def qbell_poly(n: int) -> QPolynomial:
    """``B_n(q) = sum_k {n,k}_q``."""
    total = QZERO
    for entry in qstirling_row(n):
        total = total + entry
    return total


@dataclass
class IdentityCase:
    n: int
    passed: bool
    lhs: XPolynomial
    rhs: XPolynomial


@dataclass
class IdentityReport:
    cases: list[IdentityCase] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def lines(self) -> list[str]:
        return [f"n={c.n}\t{'pass' if c.passed else 'FAIL'}" for c in self.cases]


def verify_cigler_identity(n_max: int) -> IdentityReport:
    """Check ``xq_product(n) == sum_k {n,k}_q F_k`` exactly for ``n <= n_max``."""
    if n_max > MAX_ORACLE_N:
        raise ValueError(f"identity check is capped at n={MAX_ORACLE_N}, got {n_max}")
    report = IdentityReport()
    for n in range(n_max + 1):
        lhs = xq_product(n)
        rhs = XPolynomial()
        for k, c in enumerate(qstirling_row(n)):
            rhs = rhs + falling_poly(k) * c
        report.cases.append(IdentityCase(n, lhs == rhs, lhs, rhs))
    return report
