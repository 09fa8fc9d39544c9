"""Exact threshold arithmetic for how many generators a reduction needs.

A one-dimensional local ring whose reduced normalization has M maximal
ideals and residue field of size q has an n-generated reduction for every
ideal exactly when M <= (q^(n+1) - q)/(q - 1).  All functions here use exact
integers; the closed form with a logarithm is evaluated by comparing powers.
"""

from __future__ import annotations

__all__ = ["capacity", "index_set_size", "min_generators", "min_generators_closed_form", "admits_principal"]


def _check_q(q: int) -> None:
    if q < 2:
        raise ValueError(f"residue field size must be at least 2, got {q}")


def capacity(q: int, n: int) -> int:
    """Largest number of maximal ideals for which n generators always suffice."""
    _check_q(q)
    if n < 1:
        raise ValueError("n must be positive")
    num = q ** (n + 1) - q
    assert num % (q - 1) == 0
    return num // (q - 1)


def index_set_size(q: int, n: int) -> int:
    """1 + q + ... + q^n."""
    _check_q(q)
    if n < 1:
        raise ValueError("n must be positive")
    return (q ** (n + 1) - 1) // (q - 1)


def min_generators(q: int, M: int) -> int:
    """Least n >= 1 with M <= capacity(q, n), by direct search."""
    _check_q(q)
    if M < 1:
        raise ValueError("M must be positive")
    n = 1
    while capacity(q, n) < M:
        n += 1
    assert n == min_generators_closed_form(q, M)
    return n


def min_generators_closed_form(q: int, M: int) -> int:
    """ceil(log_q(q + (q-1) M)) - 1, computed without floating point."""
    target = q + (q - 1) * M
    k, power = 0, 1
    while power < target:
        k += 1
        power *= q
    return max(k - 1, 1)


def admits_principal(q: int, M: int) -> bool:
    _check_q(q)
    return M <= q
