"""Packing and existence bounds, evaluated in exact integer arithmetic.

Every predicate returns a :class:`BoundReport` with both sides of the
inequality so callers can print the margin rather than a bare verdict.
Right-hand sides grow like 2^(n-k+r), so everything stays in Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

__all__ = [
    "BoundReport",
    "gv_check",
    "hybrid_hamming",
    "singleton_check",
    "symmetric_hamming",
]


@dataclass(frozen=True)
class BoundReport:
    """lhs <= rhs packing/existence inequality, evaluated exactly."""

    lhs: int
    rhs: int

    @property
    def satisfied(self) -> bool:
        return self.lhs <= self.rhs

    def __str__(self) -> str:
        op = "<=" if self.satisfied else ">"
        return f"{self.lhs} {op} {self.rhs}"


def singleton_check(n: int, k: int, d: int) -> bool:
    """n - k >= 2(d - 1), necessary for any [[n,k,d]] stabilizer code."""
    return n - k >= 2 * (d - 1)


def gv_check(n: int, k: int, d: int) -> BoundReport:
    """Existence guarantee: sum_{i=1}^{d-1} 3^i C(n,i) <= 2^(n-k).

    When satisfied, an [[n,k,d]] stabilizer code (nondegenerate, even)
    exists; codes can still exist when it fails.
    """
    lhs = sum(3**i * comb(n, i) for i in range(1, d))
    return BoundReport(lhs, 2 ** (n - k))


def hybrid_hamming(n_q: int, n_c: int, t_q: int, t_c: int, s: int) -> BoundReport:
    """Packing bound for s syndrome bits shared by qubit and bit errors.

    Counts all combinations of discretized errors on up to t_q of n_q
    qubits and plain flips on up to t_c of n_c bits against the 2^s
    distinguishable patterns.  n_q = 0 gives the classical Hamming bound,
    n_c = 0 the quantum one.
    """
    lhs = sum(
        3**i * comb(n_q, i) * comb(n_c, j)
        for i in range(t_q + 1)
        for j in range(t_c + 1)
    )
    return BoundReport(lhs, 2**s)


def symmetric_hamming(n: int, k: int, r: int, t: int) -> BoundReport:
    """Packing bound for combined t-error correction with r redundant checks.

    A scheme on an [[n,k]] code that extracts n-k+r syndrome bits and
    corrects any mix of data errors and syndrome flips of total weight at
    most t must satisfy

        sum_{j=0}^{t} sum_{i=0}^{t-j} 3^i C(n,i) C(n-k+r, j) <= 2^(n-k+r).
    """
    m = n - k + r
    lhs = sum(
        3**i * comb(n, i) * comb(m, j)
        for j in range(t + 1)
        for i in range(t - j + 1)
    )
    return BoundReport(lhs, 2**m)
