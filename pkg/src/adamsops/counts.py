"""Bounded-composition counts.

mu(n, l, k, p) is the number of integer tuples (k_1, ..., k_n) with
0 <= k_r <= l-1 and k_1 + ... + k_n = l*k - p.  These counts are the raw
coefficients of the Adams operation psi^l on the primitive K-theory classes
of U(n); the symplectic and spin matrices use the symmetrized combinations
alpha and beta.

Two independent algorithms are provided and cross-checked by the test
suite: a dynamic-programming count (`mu_enumerate`) and an
inclusion-exclusion closed form (`mu_closed`).
"""

from __future__ import annotations

from functools import lru_cache

from .exactmath import binomial

__all__ = ["mu_enumerate", "mu_closed", "alpha", "beta"]


def _validate(n: int, l: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"number of parts must be positive, got n={n}")
    if l < 1:
        raise ValueError(f"part bound parameter must be positive, got l={l}")
    if k < 0:
        raise ValueError(f"wedge degree must be nonnegative, got k={k}")


@lru_cache(maxsize=None)
def _dp_table(n: int, l: int) -> tuple[int, ...]:
    """Row n of the part-count table: entry s = number of n-tuples with
    parts in 0..l-1 summing to s, for 0 <= s <= n*(l-1)."""
    row = [1]
    for r in range(1, n + 1):
        top = r * (l - 1)
        prev = row
        row = [0] * (top + 1)
        for s in range(top + 1):
            lo = max(0, s - (l - 1))
            hi = min(s, (r - 1) * (l - 1))
            row[s] = sum(prev[j] for j in range(lo, hi + 1))
    return tuple(row)


@lru_cache(maxsize=None)
def mu_enumerate(n: int, l: int, k: int, p: int) -> int:
    """Count the tuples directly, by dynamic programming over the parts."""
    _validate(n, l, k)
    s = l * k - p
    if s < 0 or s > n * (l - 1):
        return 0
    return _dp_table(n, l)[s]


@lru_cache(maxsize=None)
def mu_closed(n: int, l: int, k: int, p: int) -> int:
    """The same count by inclusion-exclusion over parts that overflow l-1:

        mu = sum_q (-1)^q C(n, q) C(n-1 + s - l*q, n-1),   s = l*k - p,

    with q running while s - l*q >= 0 (and q <= n).  Running the sum in
    terms of s rather than stopping at q = k-1 keeps the formula correct
    for p <= 0, where the q = k term is nonzero; for p >= 1 the two ranges
    agree.  The guard also settles k = 0: mu = 1 iff p = 0.
    """
    _validate(n, l, k)
    s = l * k - p
    if s < 0 or s > n * (l - 1):
        return 0
    total = 0
    for q in range(0, min(n, s // l) + 1):
        term = binomial(n, q) * binomial(n - 1 + s - l * q, n - 1)
        total += -term if q % 2 else term
    return total


def alpha(n: int, l: int, k: int, p: int) -> int:
    """mu(n, l, k, p) + mu(n, l, k, n-p)."""
    return mu_closed(n, l, k, p) + mu_closed(n, l, k, n - p)


def beta(n: int, l: int, k: int, p: int) -> int:
    """mu(n, l, k, p) - mu(n, l, k, n-p); antisymmetric under p -> n-p."""
    return mu_closed(n, l, k, p) - mu_closed(n, l, k, n - p)
