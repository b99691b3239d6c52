"""Exact linear algebra over Q.

Small dense routines (fraction-pivot Gaussian elimination) used by the
regularity tests and the witness solver.  Matrices are lists of rows of
Fractions; all arithmetic is exact.
"""

from fractions import Fraction

__all__ = ["row_echelon", "matrix_rank", "kernel_vector", "solve_linear"]


def _reduce(rows, ncols):
    """Bring ``rows`` (mutated) to row echelon form; return pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def row_echelon(matrix):
    """Return (reduced rows, pivot column list) of a copy of ``matrix``."""
    rows = [[Fraction(v) for v in row] for row in matrix]
    ncols = len(rows[0]) if rows else 0
    pivots = _reduce(rows, ncols)
    return rows, pivots


def matrix_rank(matrix):
    """Exact rank of a matrix over Q."""
    return len(row_echelon(matrix)[1])


def kernel_vector(matrix):
    """A nonzero vector v with ``matrix @ v = 0``, or None if injective.

    ``matrix`` is a list of rows; the kernel refers to the column space, so a
    returned v has one entry per column.
    """
    rows = [[Fraction(v) for v in row] for row in matrix]
    ncols = len(rows[0]) if rows else 0
    if not rows:
        # A map out of a nonzero space into the zero space kills everything.
        if ncols == 0:
            return None
        v = [Fraction(0)] * ncols
        v[0] = Fraction(1)
        return v
    pivots = _reduce(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    c0 = free[0]
    v = [Fraction(0)] * ncols
    v[c0] = Fraction(1)
    for r, pc in enumerate(pivots):
        v[pc] = -rows[r][c0]
    return v


def solve_linear(matrix, rhs):
    """One exact solution of ``matrix @ x = rhs`` or None if inconsistent."""
    rows = [[Fraction(v) for v in row] + [Fraction(b)]
            for row, b in zip(matrix, rhs)]
    ncols = len(matrix[0]) if matrix else 0
    pivots = _reduce(rows, ncols)
    for row in rows:
        if all(v == 0 for v in row[:-1]) and row[-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][-1]
    return x
