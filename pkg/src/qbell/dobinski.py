"""Certified evaluation of the Dobinski and q-Dobinski series.

Both series are Poisson(1) expectations,

    B_n    = e^-1 * sum_j j^n / j!
    B_n(q) = e^-1 * sum_j X_q^n(j) / j!,

evaluated with exact rational partial sums, a proven tail bound and a
rational bracket around e^-1.  A seeded Monte Carlo estimate is provided as
an independent, purely statistical sanity check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .cigler import qbell_poly
from .exact import RationalInterval, Scalar, as_rational, e_inverse_bracket, factorial, interval_mul

DEFAULT_Q_WIDTH = Fraction(1, 10**6)
CLASSICAL_WIDTH = Fraction(1, 2)
MIN_MC_SAMPLES = 1000
START_K = 10


def term_value(n: int, q0: Scalar, j: int) -> Fraction:
    """``X_q^n`` at ``X = j``, ``q = q0``: ``j (j-1+q0) ... (j-1+q0^(n-1))``."""
    if n < 0 or j < 0:
        raise ValueError("n and j must be nonnegative")
    if n == 0:
        return Fraction(1)
    q0 = as_rational(q0)
    value = Fraction(j)
    power = Fraction(1)
    for _ in range(1, n):
        if value == 0:
            break
        power *= q0
        value *= j - 1 + power
    return value


def _dominating_shift(n: int, q0: Fraction) -> Fraction:
    # |j - 1 + q0^i| <= j + M for 1 <= i <= n-1, and j <= j + M
    if n <= 1:
        return Fraction(1)
    return max(Fraction(1), abs(q0) ** (n - 1))


def tail_bound(n: int, q0: Scalar, J: int) -> Optional[Fraction]:
    """Bound on ``sum_{j>J} |term_value(n, q0, j)| / j!``, or ``None``.

    Terms are dominated by ``a_j = (j+M)^n / j!``.  Once the ratio
    ``a_{J+1}/a_J`` is at most 1/2 (it decreases in ``j``) the tail is at
    most ``2 a_{J+1}``.  ``None`` means the ratio test failed at ``J``; retry
    with a larger ``J``.
    """
    if J < 1:
        raise ValueError("J must be at least 1")
    M = _dominating_shift(n, as_rational(q0))
    ratio = ((J + 1 + M) / (J + M)) ** n / (J + 1)
    if ratio > Fraction(1, 2):
        return None
    return 2 * (J + 1 + M) ** n / factorial(J + 1)


@dataclass(frozen=True)
class DobinskiResult:
    n: int
    q0: Optional[Fraction]
    J: int
    K: int
    enclosure: RationalInterval
    certified_value: Optional[Fraction]

    @property
    def certified(self) -> bool:
        return self.certified_value is not None


class _PartialSums:
    """Running ``sum_{j<=J} term_value(n, q0, j) / j!``."""

    def __init__(self, n: int, q0: Fraction):
        self.n, self.q0 = n, q0
        self.J = -1
        self.value = Fraction(0)
        self._fact = 1

    def extend_to(self, J: int) -> Fraction:
        while self.J < J:
            self.J += 1
            if self.J:
                self._fact *= self.J
            self.value += term_value(self.n, self.q0, self.J) / self._fact
        return self.value


def _enclose(n: int, q0: Fraction, width: Fraction) -> tuple[int, int, RationalInterval]:
    nonnegative = q0 >= 0
    J, K = 2 * n + 2, START_K
    sums = _PartialSums(n, q0)
    half = width / 2
    while True:
        tail = tail_bound(n, q0, J)
        if tail is None:
            J *= 2
            continue
        S = sums.extend_to(J)
        core = RationalInterval(S if nonnegative else S - tail, S + tail)
        magnitude = max(abs(core.lo), abs(core.hi))
        bracket = e_inverse_bracket(K)
        while bracket.width * magnitude >= half:
            K += 1
            bracket = e_inverse_bracket(K)
        if bracket.hi * core.width >= half:
            J *= 2
            continue
        # width <= (e_hi - e_lo) * magnitude + e_hi * core.width < width
        return J, K, interval_mul(bracket, core)


def dobinski_bell(n: int, width: Scalar = CLASSICAL_WIDTH) -> DobinskiResult:
    """Certify ``B_n`` as the unique integer inside a narrow enclosure."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    width = as_rational(width)
    if not 0 < width <= CLASSICAL_WIDTH:
        raise ValueError("width must lie in (0, 1/2] to isolate an integer")
    J, K, enclosure = _enclose(n, Fraction(1), width)
    ints = enclosure.integers()
    value = Fraction(ints[0]) if len(ints) == 1 else None
    return DobinskiResult(n, None, J, K, enclosure, value)


def dobinski_qbell(n: int, q0: Scalar, width: Scalar = DEFAULT_Q_WIDTH) -> DobinskiResult:
    """Enclose ``B_n(q0)`` and check it against the exact polynomial value."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    q0, width = as_rational(q0), as_rational(width)
    if width <= 0:
        raise ValueError("width must be positive")
    J, K, enclosure = _enclose(n, q0, width)
    exact = qbell_poly(n)(q0)
    return DobinskiResult(n, q0, J, K, enclosure, exact if exact in enclosure else None)


@dataclass(frozen=True)
class McEstimate:
    mean: float
    std_error: float
    samples: int
    seed: int
    exact_mean: Fraction

    def z_score(self, target: Scalar) -> float:
        diff = abs(self.exact_mean - as_rational(target))
        if self.std_error == 0:
            return 0.0 if diff == 0 else math.inf
        return float(diff) / self.std_error


def _poisson1_cdf() -> np.ndarray:
    p = math.exp(-1.0)
    cdf, total, j = [], 0.0, 0
    while True:
        total += p
        cdf.append(total)
        j += 1
        p /= j
        if p < 1e-30:
            return np.array(cdf)


_CDF = _poisson1_cdf()


def poisson_draws(samples: int, seed: int) -> np.ndarray:
    """Poisson(1) variates by inverting the CDF against seeded uniforms."""
    if not 0 <= seed < 2**64:
        raise ValueError("seed must be an unsigned 64-bit integer")
    rng = np.random.Generator(np.random.PCG64(seed))
    u = rng.random(samples)
    return np.searchsorted(_CDF, u, side="right")


def poisson_mc(n: int, q0: Scalar, samples: int, seed: int) -> McEstimate:
    """Monte Carlo mean of ``X_q^n`` under Poisson(1)."""
    if samples < MIN_MC_SAMPLES:
        raise ValueError(f"need at least {MIN_MC_SAMPLES} samples, got {samples}")
    q0 = as_rational(q0)
    draws = poisson_draws(samples, seed)
    js, counts = np.unique(draws, return_counts=True)
    # at most a few dozen distinct draws, so the moments are taken exactly
    values = [term_value(n, q0, int(j)) for j in js]
    counts = [int(c) for c in counts]
    mean = sum((c * v for c, v in zip(counts, values)), Fraction(0)) / samples
    var = sum((c * (v - mean) ** 2 for c, v in zip(counts, values)), Fraction(0)) / (samples - 1)
    std_error = math.sqrt(var / samples)
    return McEstimate(float(mean), std_error, samples, seed, mean)
