"""
Smith and Hermite normal forms of integer matrices.

Matrices are numpy arrays of dtype object, so entries are Python ints and
never overflow. Every transform is tracked together with its inverse, since
`np.linalg.inv` only works in floating point.
"""

from __future__ import annotations

from typing import List, NamedTuple, Sequence

import numpy as np


class SmithForm(NamedTuple):
    """A = S @ D @ T with S, T unimodular and D diagonal."""

    S: np.ndarray
    D: np.ndarray
    T: np.ndarray
    Sinv: np.ndarray
    Tinv: np.ndarray

    @property
    def diagonal(self: SmithForm) -> List[int]:
        """The invariant factors, zeros included, in order."""
        return [self.D[i, i] for i in range(min(self.D.shape))]

    @property
    def rank(self: SmithForm) -> int:
        """The number of nonzero invariant factors."""
        return sum(1 for d in self.diagonal if d != 0)


def as_integer_matrix(rows: Sequence[Sequence[int]], ncols: int) -> np.ndarray:
    """
    Build an object-dtype matrix, keeping the column count for empty input.

    Args:
        rows: The matrix rows.
        ncols: The number of columns.

    Returns:
        A len(rows) x ncols matrix of Python ints.
    """
    out = np.zeros((len(rows), ncols), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            out[i, j] = int(value)
    return out


def _identity(size: int) -> np.ndarray:
    return np.array(np.eye(size, dtype=int), dtype=object)


def smith_normal_form(A: np.ndarray) -> SmithForm:
    """
    Compute the Smith normal form of an integer matrix.

    Pivots on the entry of least absolute value, so each pass strictly
    shrinks the pivot until it divides everything left of the block.
    The diagonal entries are nonnegative, nonzero ones come first, and each
    divides the next.

    Args:
        A: An integer matrix.

    Returns:
        (S, D, T, Sinv, Tinv) with A == S @ D @ T, S @ Sinv == I and
        Tinv @ T == I.
    """
    D = np.array(A, dtype=object).copy()
    rows, cols = D.shape
    # L @ A @ R == D throughout; S = L^-1 and T = R^-1
    L, Linv = _identity(rows), _identity(rows)
    R, Rinv = _identity(cols), _identity(cols)

    def swap_rows(i: int, j: int) -> None:
        D[[i, j]] = D[[j, i]]
        L[[i, j]] = L[[j, i]]
        Linv[:, [i, j]] = Linv[:, [j, i]]

    def swap_cols(i: int, j: int) -> None:
        D[:, [i, j]] = D[:, [j, i]]
        R[:, [i, j]] = R[:, [j, i]]
        Rinv[[i, j]] = Rinv[[j, i]]

    def add_row(target: int, source: int, k: int) -> None:
        D[target] += k * D[source]
        L[target] += k * L[source]
        Linv[:, source] -= k * Linv[:, target]

    def add_col(target: int, source: int, k: int) -> None:
        D[:, target] += k * D[:, source]
        R[:, target] += k * R[:, source]
        Rinv[source] -= k * Rinv[target]

    def negate_row(i: int) -> None:
        D[i] = -D[i]
        L[i] = -L[i]
        Linv[:, i] = -Linv[:, i]

    for t in range(min(rows, cols)):
        while True:
            nonzero = [
                (abs(D[i, j]), i, j)
                for i in range(t, rows)
                for j in range(t, cols)
                if D[i, j] != 0
            ]
            if not nonzero:
                break
            _, i, j = min(nonzero)
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            pivot = D[t, t]

            for i in range(t + 1, rows):
                if D[i, t] != 0:
                    add_row(i, t, -(D[i, t] // pivot))
            for j in range(t + 1, cols):
                if D[t, j] != 0:
                    add_col(j, t, -(D[t, j] // pivot))
            if any(D[i, t] != 0 for i in range(t + 1, rows)) or any(
                D[t, j] != 0 for j in range(t + 1, cols)
            ):
                continue

            stray = next(
                (
                    i
                    for i in range(t + 1, rows)
                    for j in range(t + 1, cols)
                    if D[i, j] % pivot != 0
                ),
                None,
            )
            if stray is not None:
                add_row(t, stray, 1)
                continue
            if pivot < 0:
                negate_row(t)
            break

    return SmithForm(S=Linv, D=D, T=Rinv, Sinv=L, Tinv=R)


def integer_kernel(A: np.ndarray) -> np.ndarray:
    """
    Get a basis of the integer vectors x with A @ x == 0.

    Args:
        A: An integer matrix with n columns.

    Returns:
        An n x k matrix whose columns form a basis of the kernel lattice.
    """
    form = smith_normal_form(A)
    return form.Tinv[:, form.rank :]


def column_hermite_form(C: np.ndarray) -> np.ndarray:
    """
    Bring a matrix to column Hermite normal form.

    Only unimodular column operations are used, so the result spans the same
    column lattice and differs from C by a change of basis on the right. Each
    nonzero column has a positive pivot, pivots move strictly down, and the
    entries left of a pivot lie in [0, pivot).

    Args:
        C: An integer matrix.

    Returns:
        The canonical representative of C modulo GL(k, Z) on the right.
    """
    H = np.array(C, dtype=object).copy()
    rows, cols = H.shape
    c = 0
    for i in range(rows):
        if c == cols:
            break
        while True:
            nonzero = [(abs(H[i, j]), j) for j in range(c, cols) if H[i, j] != 0]
            if not nonzero:
                break
            _, j = min(nonzero)
            if j != c:
                H[:, [c, j]] = H[:, [j, c]]
            for k in range(c + 1, cols):
                H[:, k] -= (H[i, k] // H[i, c]) * H[:, c]
            if all(H[i, k] == 0 for k in range(c + 1, cols)):
                break
        if H[i, c] == 0:
            continue
        if H[i, c] < 0:
            H[:, c] = -H[:, c]
        for k in range(c):
            H[:, k] -= (H[i, k] // H[i, c]) * H[:, c]
        c += 1
    return H
