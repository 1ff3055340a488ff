"""Determinants of all-ones-plus-diagonal integer matrices.

The matrix at hand is J + diag(a): ones everywhere, with the k-th diagonal
entry bumped to 1 + a_k by an integer shift a_k. Being a rank-one
perturbation of a diagonal matrix, its determinant has the closed form

    (1 + sum_k 1/a_k) * prod_k a_k        (all a_k nonzero)

(the matrix determinant lemma with A = diag(a), u = v = all-ones), and the
division-free rearrangement

    prod_k a_k + sum_k prod_{j != k} a_j

which is a polynomial identity in the shifts and therefore valid even when
some a_k vanish. Both are evaluated exactly here, alongside a literal
replay of the two-step row/column elimination that proves the closed form,
and a generic fraction-free Bareiss oracle for independent verification.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Union

from .errors import DomainError


@dataclass(frozen=True)
class DiagonalShifts:
    """Integer shifts a_1..a_n applied to the diagonal of the all-ones matrix."""

    a: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.a, tuple):
            object.__setattr__(self, "a", tuple(self.a))
        if len(self.a) < 1:
            raise DomainError("at least one diagonal shift is required")
        for value in self.a:
            if not isinstance(value, int):
                raise DomainError(f"shifts must be integers, got {type(value).__name__}")

    @property
    def n(self) -> int:
        return len(self.a)

    def __len__(self) -> int:
        return len(self.a)

    def __iter__(self):
        return iter(self.a)


ShiftsLike = Union[DiagonalShifts, Iterable[int]]


def as_shifts(shifts: ShiftsLike) -> DiagonalShifts:
    """Coerce a DiagonalShifts or any iterable of ints to DiagonalShifts."""
    if isinstance(shifts, DiagonalShifts):
        return shifts
    return DiagonalShifts(tuple(shifts))


@dataclass(frozen=True)
class StructuredMatrix:
    """Dense materialization: entries[i][i] = 1 + a[i], ones elsewhere."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def rows(self) -> list[list[int]]:
        """Mutable row-major copy, suitable for elimination."""
        return [list(row) for row in self.entries]

    def render(self) -> str:
        """Debug text form: rows of decimal integers, single-space separated."""
        return "\n".join(" ".join(str(v) for v in row) for row in self.entries)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class EliminationTrace:
    """Intermediate state of the two-step elimination of the structured matrix.

    post_row_step is the first column right after subtracting row 1 from all
    later rows: (1 + a_1, -a_1, ..., -a_1). pivot_b is the (1,1) entry after
    the column step, a_1 * (1 + sum_k 1/a_k), and final_value is
    pivot_b * a_2 * ... * a_n.
    """

    pivot_b: Fraction
    post_row_step: tuple[int, ...]
    final_value: Fraction


def materialize_matrix(shifts: ShiftsLike) -> StructuredMatrix:
    """Build the n x n matrix with diagonal 1 + a_k and ones elsewhere."""
    s = as_shifts(shifts)
    rows = []
    for i, shift in enumerate(s.a):
        row = [1] * s.n
        row[i] = 1 + shift
        rows.append(tuple(row))
    return StructuredMatrix(tuple(rows))


def det_closed_form(shifts: ShiftsLike) -> int:
    """Determinant via (1 + sum 1/a_k) * prod a_k with exact rationals.

    Requires every shift nonzero. The sum's denominator divides the product,
    so the result is always an exact integer.
    """
    s = as_shifts(shifts)
    if 0 in s.a:
        raise DomainError("closed form requires nonzero shifts; use det_expanded")
    total = (1 + sum(Fraction(1, value) for value in s.a)) * prod(s.a)
    assert total.denominator == 1
    return int(total)


def det_expanded(shifts: ShiftsLike) -> int:
    """Determinant via prod a_k + sum_k prod_{j != k} a_j, division-free.

    Valid for all integer shifts, zeros included. One pass keeps the running
    product p = a_1..a_k and the running leave-one-out sum
    s = sum_{i<=k} prod_{j<=k, j!=i} a_j, extended by s <- s*a + p and
    p <- p*a. Every multiplication is big-by-small, unlike pairing prefix
    and suffix product arrays, whose n cross products are each as large as
    the full product and dominate the runtime for n in the thousands.
    """
    a = as_shifts(shifts).a
    p = 1
    s = 0
    for value in a:
        s = s * value + p
        p *= value
    return p + s


def det_elimination(shifts: ShiftsLike) -> tuple[int, EliminationTrace]:
    """Determinant via an explicit two-step elimination, with its trace.

    Step one subtracts row 1 from every later row, leaving -a_1 down the
    first column and a_2..a_n on the diagonal below the first row. Step two
    adds (a_1/a_i) times column i to column 1 for i = 2..n, clearing the
    first column under the pivot; the matrix is then upper triangular with
    pivot b = a_1 * (1 + sum_k 1/a_k), so the determinant is b * a_2...a_n.
    Requires every shift nonzero (the column step divides by a_i).
    """
    s = as_shifts(shifts)
    if 0 in s.a:
        raise DomainError("elimination step divides by a_i")
    a = s.a
    n = s.n
    m = [[Fraction(v) for v in row] for row in materialize_matrix(s).entries]

    for i in range(1, n):  # r_i <- r_i - r_1
        m[i] = [x - y for x, y in zip(m[i], m[0])]
    post_row_step = tuple(int(m[i][0]) for i in range(n))

    for i in range(1, n):  # c_1 <- c_1 + (a_1 / a_i) c_i
        factor = Fraction(a[0], a[i])
        for r in range(n):
            m[r][0] += factor * m[r][i]
    assert all(m[i][0] == 0 for i in range(1, n))

    pivot = m[0][0]
    final = pivot
    for i in range(1, n):
        final *= m[i][i]
    assert final.denominator == 1
    trace = EliminationTrace(pivot_b=pivot, post_row_step=post_row_step, final_value=final)
    return int(final), trace


def _square_rows(matrix) -> list[list[int]]:
    if isinstance(matrix, StructuredMatrix):
        return matrix.rows()
    rows = [list(row) for row in matrix]
    if not rows:
        raise DomainError("matrix must have at least one row")
    if any(len(row) != len(rows) for row in rows):
        raise DomainError("matrix must be square")
    for row in rows:
        for value in row:
            if not isinstance(value, int):
                raise DomainError(f"matrix entries must be integers, got {type(value).__name__}")
    return rows


def det_bareiss(matrix) -> int:
    """Exact determinant of any square integer matrix, fraction-free.

    Single-step Bareiss elimination: after stage k every entry is a
    (k+1)x(k+1) minor of the input, so dividing the condensation
    pivot*m[i][j] - m[i][k]*m[k][j] by the previous pivot is always exact
    and arithmetic never leaves the integers. Zero pivots are repaired by
    row swaps with sign tracking; a pivot column with no nonzero candidate
    means the matrix is singular and the determinant is 0.
    """
    rows = _square_rows(matrix)
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot_row = rows[k]
        pivot = pivot_row[k]
        for i in range(k + 1, n):
            row = rows[i]
            f = row[k]
            rows[i] = row[: k + 1] + [
                (pivot * x - f * y) // prev
                for x, y in zip(row[k + 1 :], pivot_row[k + 1 :])
            ]
        prev = pivot
    return sign * rows[n - 1][n - 1]
