"""Stirling numbers of the second kind and Bell numbers."""

from __future__ import annotations

import threading

MAX_ENUMERATION_N = 12

_stirling_rows: list[tuple[int, ...]] = [(1,)]
_bell_values: list[int] = [1]
_lock = threading.Lock()


def _extend_stirling(n: int) -> None:
    with _lock:
        while len(_stirling_rows) <= n:
            prev = _stirling_rows[-1]
            m = len(prev)
            row = [0] * (m + 1)
            for k in range(1, m + 1):
                row[k] = (k * prev[k] if k < m else 0) + prev[k - 1]
            _stirling_rows.append(tuple(row))


def stirling_row(n: int) -> tuple[int, ...]:
    """``(S(n,0), ..., S(n,n))``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n >= len(_stirling_rows):
        _extend_stirling(n)
    return _stirling_rows[n]


def stirling_table(n_max: int) -> tuple[tuple[int, ...], ...]:
    return tuple(stirling_row(n) for n in range(n_max + 1))


def stirling2(n: int, k: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    return stirling_row(n)[k]


def bell(n: int) -> int:
    """Bell number via the Bell (Aitken) triangle."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n < len(_bell_values):
        return _bell_values[n]
    with _lock:
        # each triangle row starts with the last entry of the previous row,
        # and the first entry of row m is B_m
        row = [1]
        values = [1]
        for _ in range(n):
            nxt = [row[-1]]
            for x in row:
                nxt.append(nxt[-1] + x)
            row = nxt
            values.append(row[0])
        if len(values) > len(_bell_values):
            _bell_values[:] = values
    return _bell_values[n]


def restricted_growth_strings(n: int):
    """Yield every restricted growth string of length ``n``.

    A string ``a`` has ``a[0] == 0`` and ``a[i] <= 1 + max(a[:i])``; these are
    in bijection with the set partitions of ``{1..n}`` (``a[i]`` is the block
    holding element ``i+1``).
    """
    if n == 0:
        yield ()
        return
    a = [0] * n
    m = [0] * n  # m[i] = max(a[:i+1])
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] == m[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = max(m[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            m[j] = m[i]


def enumerate_set_partitions(n: int) -> int:
    """Count partitions of an n-set by brute-force enumeration (test oracle)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_ENUMERATION_N:
        raise ValueError(f"enumeration is capped at n={MAX_ENUMERATION_N}, got {n}")
    return sum(1 for _ in restricted_growth_strings(n))


def count_partitions_by_blocks(n: int) -> list[int]:
    """Histogram of block counts over all partitions of an n-set."""
    if n > MAX_ENUMERATION_N:
        raise ValueError(f"enumeration is capped at n={MAX_ENUMERATION_N}, got {n}")
    counts = [0] * (n + 1)
    for a in restricted_growth_strings(n):
        counts[(max(a) + 1) if a else 0] += 1
    return counts
