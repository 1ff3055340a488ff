"""The prime-diagonal determinant sequence D_n (OEIS A067549).

D_n is the determinant of the n x n matrix carrying 2, 3, 5, ..., p_n on
its diagonal and ones everywhere else, i.e. the structured determinant with
shifts a_k = p_k - 1 (all nonzero, since p_k >= 2). Direct evaluation
delegates to the division-free expanded form. The incremental path uses

    P_n = P_{n-1} * (p_n - 1)              P_0 = 1
    D_n = (p_n - 1) * D_{n-1} + P_{n-1}    D_0 = 1

which follows from D_n = P_n + sum_k P_n / (p_k - 1): scaling D_{n-1} by
(p_n - 1) produces every term of D_n except P_{n-1}. The recurrence is
derived here, not taken from elsewhere, so verify_sequence cross-checks it
against direct evaluation (and the Bareiss oracle) value by value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .primes import first_n_primes
from .structured_det import det_bareiss, det_expanded, materialize_matrix

#: First six published terms of OEIS A067549.
A067549_KNOWN_VALUES = (2, 5, 22, 140, 1448, 17856)

#: Largest n at which verify_sequence runs the O(n^3) Bareiss oracle by default.
DEFAULT_ORACLE_CUTOFF = 64


@dataclass(frozen=True)
class SequenceRecord:
    """One row of the sequence: index, prime, shift product, determinant."""

    n: int
    p_n: int
    P_n: int
    D_n: int


def prime_shifts(n: int) -> list[int]:
    """The shift vector (p_1 - 1, ..., p_n - 1) defining D_n."""
    return [p - 1 for p in first_n_primes(n)]


def d_direct(n: int) -> int:
    """D_n evaluated directly through the expanded determinant formula."""
    if n < 1:
        raise DomainError("sequence indices are 1-based")
    return det_expanded(prime_shifts(n))


def d_sequence(count: int) -> list[SequenceRecord]:
    """Records for n = 1..count, built incrementally in O(count) multiplications."""
    if count < 0:
        raise DomainError("count must be non-negative")
    records = []
    product = 1  # P_{n-1}
    determinant = 1  # D_{n-1}
    for n, p in enumerate(first_n_primes(count), start=1):
        determinant = (p - 1) * determinant + product
        product *= p - 1
        records.append(SequenceRecord(n=n, p_n=p, P_n=product, D_n=determinant))
    return records


@dataclass(frozen=True)
class VerificationRow:
    """Per-index comparison of the recurrence, direct, and oracle values."""

    n: int
    recurrence: int
    direct: int
    oracle: int | None  # None above the oracle cutoff
    agree: bool


@dataclass(frozen=True)
class VerificationReport:
    count: int
    oracle_cutoff: int
    rows: tuple[VerificationRow, ...]
    passed: bool
    first_failure: int | None


def verify_sequence(count: int, oracle_cutoff: int = DEFAULT_ORACLE_CUTOFF) -> VerificationReport:
    """Check recurrence, direct formula, and Bareiss oracle against each other.

    Divergence marks the report failed with the smallest offending n; it is
    reported, never raised, so callers decide how to react.
    """
    if count < 1:
        raise DomainError("count must be positive")
    rows = []
    first_failure = None
    for record in d_sequence(count):
        direct = d_direct(record.n)
        oracle = None
        if record.n <= oracle_cutoff:
            oracle = det_bareiss(materialize_matrix(prime_shifts(record.n)))
        agree = record.D_n == direct and (oracle is None or oracle == direct)
        rows.append(VerificationRow(record.n, record.D_n, direct, oracle, agree))
        if not agree and first_failure is None:
            first_failure = record.n
    return VerificationReport(
        count=count,
        oracle_cutoff=oracle_cutoff,
        rows=tuple(rows),
        passed=first_failure is None,
        first_failure=first_failure,
    )


__all__ = [
    "A067549_KNOWN_VALUES",
    "DEFAULT_ORACLE_CUTOFF",
    "SequenceRecord",
    "VerificationReport",
    "VerificationRow",
    "d_direct",
    "d_sequence",
    "prime_shifts",
    "verify_sequence",
]
