"""Exact matrix rank, row reduction and kernels over Q(w).

``rank`` clears denominators row by row and then runs Bareiss' fraction-free
elimination in the ring Z[w], where every intermediate division is exact.
``rref``/``kernel`` work directly with field elements and are meant for the
small systems (conics, the pair space of the pencil map) where an explicit
basis is needed.
"""

from __future__ import annotations

from math import lcm
from typing import Sequence

from gmpy2 import divexact, mpz

from .exactfield import ONE, ZERO, FieldElement

Matrix = Sequence[Sequence[FieldElement]]

__all__ = ["rank", "bareiss_rank", "rref", "kernel", "to_integral_rows"]


def to_integral_rows(M: Matrix) -> list[list[tuple[int, int]]]:
    """Scale each row by the lcm of its denominators; entries become Z[w] pairs."""
    out = []
    for row in M:
        den = 1
        for x in row:
            den = lcm(den, x.re_part.denominator, x.w_part.denominator)
        out.append([(int(x.re_part * den), int(x.w_part * den)) for x in row])
    return out


def rank(M: Matrix) -> int:
    """Exact rank of a matrix over Q(w).

    Fraction-free (Bareiss) elimination in Z[w]: after clearing denominators
    every intermediate entry is a minor of the input, so the division by the
    previous pivot is exact.  Pivot rule: in each column, the first remaining
    row with a nonzero entry.
    """
    return bareiss_rank(to_integral_rows(M))


def bareiss_rank(int_rows) -> int:
    """Rank of a matrix with entries in Z[w], given as (re, w) integer pairs."""
    rows = [[(mpz(a), mpz(b)) for a, b in r] for r in int_rows]
    if not rows:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    zero = (mpz(0), mpz(0))
    prev = (mpz(1), mpz(0))
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][col][0] or rows[i][col][1]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        p0, p1 = prow[col]
        c, d = prev
        # division by prev = multiplication by conj(prev), then exact division by its norm
        n = c * c + c * d + d * d
        q0, q1 = c + d, -d
        for i in range(r + 1, nrows):
            row = rows[i]
            f0, f1 = row[col]
            for j in range(col + 1, ncols):
                a0, a1 = row[j]
                b0, b1 = prow[j]
                p1a1 = p1 * a1
                f1b1 = f1 * b1
                x0 = p0 * a0 - p1a1 - f0 * b0 + f1b1
                x1 = p0 * a1 + p1 * a0 + p1a1 - f0 * b1 - f1 * b0 - f1b1
                if d:
                    t = x1 * q1
                    row[j] = (divexact(x0 * q0 - t, n), divexact(x0 * q1 + x1 * q0 + t, n))
                else:
                    row[j] = (divexact(x0, c), divexact(x1, c))
            row[col] = zero
        prev = prow[col]
        r += 1
    return r


def rref(M: Matrix) -> tuple[list[list[FieldElement]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    A = [list(row) for row in M]
    if not A:
        return A, []
    nrows, ncols = len(A), len(A[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if A[i][col]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        pinv = A[r][col].inv()
        A[r] = [x * pinv for x in A[r]]
        for i in range(nrows):
            if i != r and A[i][col]:
                f = A[i][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(col)
        r += 1
    return A[:r], pivots


def kernel(M: Matrix, ncols: int | None = None) -> list[list[FieldElement]]:
    """Basis of the right kernel, one vector per free column in increasing order.

    The vector for free column ``f`` has a 1 in position ``f``, 0 in the other
    free positions, and is completed by back-substitution.
    """
    if ncols is None:
        ncols = len(M[0]) if M else 0
    R, pivots = rref(M)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis
