"""Exact determinants of all-ones-plus-diagonal integer matrices and the
prime-diagonal sequence A067549, cross-verified three independent ways."""

from .errors import DomainError
from .primes import PrimeCache, first_n_primes, nth_prime
from .prime_sequence import (
    A067549_KNOWN_VALUES,
    DEFAULT_ORACLE_CUTOFF,
    SequenceRecord,
    VerificationReport,
    VerificationRow,
    d_direct,
    d_sequence,
    prime_shifts,
    verify_sequence,
)
from .structured_det import (
    DiagonalShifts,
    EliminationTrace,
    StructuredMatrix,
    as_shifts,
    det_bareiss,
    det_closed_form,
    det_elimination,
    det_expanded,
    materialize_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "A067549_KNOWN_VALUES",
    "DEFAULT_ORACLE_CUTOFF",
    "DiagonalShifts",
    "DomainError",
    "EliminationTrace",
    "PrimeCache",
    "SequenceRecord",
    "StructuredMatrix",
    "VerificationReport",
    "VerificationRow",
    "as_shifts",
    "d_direct",
    "d_sequence",
    "det_bareiss",
    "det_closed_form",
    "det_elimination",
    "det_expanded",
    "first_n_primes",
    "materialize_matrix",
    "nth_prime",
    "prime_shifts",
    "verify_sequence",
]
