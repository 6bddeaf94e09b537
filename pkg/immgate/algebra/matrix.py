"""Exact integer matrices and the Smith normal form.

Entries are Python ints, so no computation here can overflow.  Matrices are
immutable; every operation returns a new :class:`IntMatrix`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from ..util.error import shorten_list
from ..util.type_hints import int_rows


@dataclass(frozen=True)
class IntMatrix:
    """A rows × cols matrix of arbitrary-precision integers.

    Zero-row and zero-column matrices are allowed.  They appear as presentations
    of free groups and as maps out of trivial groups.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"negative shape: {self.rows}x{self.cols}")
        if len(self.entries) != self.rows:
            raise ValueError(
                f"expected {self.rows} rows, got {len(self.entries)}"
            )
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError(
                    f"expected rows of length {self.cols}, got {shorten_list(row)}"
                )
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise TypeError(f"matrix entries must be int, not {repr(x)}")

    #########################
    ####    INTERFACE    ####
    #########################

    @classmethod
    def from_rows(cls, rows: int_rows, cols: int | None = None) -> IntMatrix:
        """Build a matrix from a sequence of rows.

        Parameters
        ----------
        rows : Sequence[Sequence[int]]
            Row-major entries.
        cols : int | None, default None
            The column count.  Required only when `rows` is empty.

        Returns
        -------
        IntMatrix
            The new matrix.
        """
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        """A matrix of zeros."""
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, size: int) -> IntMatrix:
        """The size × size identity matrix."""
        return cls(
            size,
            size,
            tuple(tuple(int(i == j) for j in range(size)) for i in range(size)),
        )

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.entries)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        columns = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in columns)
                for row in self.entries
            ),
        )

    def transpose(self) -> IntMatrix:
        """The transposed matrix."""
        return IntMatrix.from_rows(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def stack(self, other: IntMatrix) -> IntMatrix:
        """Append the rows of `other` below this matrix."""
        if self.cols != other.cols:
            raise ValueError(f"column mismatch: {self.cols} != {other.cols}")
        return IntMatrix(
            self.rows + other.rows, self.cols, self.entries + other.entries
        )

    def columns(self, count: int) -> IntMatrix:
        """The leading `count` columns."""
        return IntMatrix.from_rows([row[:count] for row in self.entries], cols=count)

    def is_square(self) -> bool:
        """Whether rows == cols."""
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        """Whether the matrix equals its transpose."""
        return self.is_square() and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def is_diagonal(self) -> bool:
        """Whether every off-diagonal entry is zero."""
        return all(
            x == 0
            for i, row in enumerate(self.entries)
            for j, x in enumerate(row)
            if i != j
        )

    def diagonal(self) -> tuple[int, ...]:
        """The entries ``(0, 0), (1, 1), ...`` up to min(rows, cols)."""
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def to_list(self) -> list[list[int]]:
        """Row-major nested lists, e.g. for JSON output."""
        return [list(row) for row in self.entries]

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination.

        Returns
        -------
        int
            The determinant.

        Raises
        ------
        ValueError
            If the matrix is not square.
        """
        if not self.is_square():
            raise ValueError(
                f"determinant of non-square {self.rows}x{self.cols} matrix"
            )
        n = self.rows
        if n == 0:
            return 1
        a = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        """Whether the matrix is square with determinant ±1."""
        return self.is_square() and abs(self.determinant()) == 1


#######################
####    PRIVATE    ####
#######################


def _swap_rows(m: list[list[int]], i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: list[list[int]], i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m: list[list[int]], target: int, source: int, factor: int) -> None:
    # row[target] += factor * row[source]
    src = m[source]
    row = m[target]
    for j, x in enumerate(src):
        row[j] += factor * x


def _add_col(m: list[list[int]], target: int, source: int, factor: int) -> None:
    for row in m:
        row[target] += factor * row[source]


def _smallest(d: list[list[int]], t: int) -> tuple[int, int] | None:
    best: tuple[int, int] | None = None
    best_abs = 0
    for i in range(t, len(d)):
        for j in range(t, len(d[i])):
            x = abs(d[i][j])
            if x and (best is None or x < best_abs):
                best, best_abs = (i, j), x
                if x == 1:
                    return best
    return best


######################
####    PUBLIC    ####
######################


def smith_normal_form(a: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Compute the Smith normal form of an integer matrix with its transforms.

    Parameters
    ----------
    a : IntMatrix
        Any integer matrix.

    Returns
    -------
    tuple[IntMatrix, IntMatrix, IntMatrix]
        ``(u, d, v)`` with `u` and `v` unimodular and ``u @ a @ v == d``.  `d`
        is diagonal with non-negative entries, each dividing the next, and all
        zero entries last.

    Notes
    -----
    The pivot at each step is the entry of least absolute value in the
    remaining submatrix.  Division with remainder then either clears its row
    and column or produces a strictly smaller pivot, so the loop terminates.
    """
    m, n = a.rows, a.cols
    d = [list(row) for row in a.entries]
    u = [list(row) for row in IntMatrix.identity(m).entries]
    v = [list(row) for row in IntMatrix.identity(n).entries]

    for t in range(min(m, n)):
        while True:
            pivot = _smallest(d, t)
            if pivot is None:
                break
            i, j = pivot
            if i != t:
                _swap_rows(d, t, i)
                _swap_rows(u, t, i)
            if j != t:
                _swap_cols(d, t, j)
                _swap_cols(v, t, j)

            p = d[t][t]
            clean = True
            for i in range(t + 1, m):
                if d[i][t]:
                    q = d[i][t] // p
                    _add_row(d, i, t, -q)
                    _add_row(u, i, t, -q)
                    clean = clean and d[i][t] == 0
            for j in range(t + 1, n):
                if d[t][j]:
                    q = d[t][j] // p
                    _add_col(d, j, t, -q)
                    _add_col(v, j, t, -q)
                    clean = clean and d[t][j] == 0
            if not clean:
                continue

            # divisibility: fold an offending row into the pivot row and retry
            offender = next(
                (
                    i
                    for i in range(t + 1, m)
                    for j in range(t + 1, n)
                    if d[i][j] % p
                ),
                None,
            )
            if offender is None:
                break
            _add_row(d, t, offender, 1)
            _add_row(u, t, offender, 1)

        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]

    return (
        IntMatrix.from_rows(u, cols=m),
        IntMatrix.from_rows(d, cols=n),
        IntMatrix.from_rows(v, cols=n),
    )


def left_kernel(a: IntMatrix) -> IntMatrix:
    """A Z-basis of ``{x : x @ a == 0}``, one basis vector per row.

    Parameters
    ----------
    a : IntMatrix
        Any integer matrix.

    Returns
    -------
    IntMatrix
        A k × a.rows matrix whose rows span the integer left kernel.
    """
    u, d, _ = smith_normal_form(a)
    rank = sum(1 for x in d.diagonal() if x)
    return IntMatrix.from_rows(u.entries[rank:], cols=a.rows)


def lattice_contains(basis: IntMatrix, vector: Sequence[int]) -> bool:
    """Whether `vector` is an integer combination of the rows of `basis`.

    Parameters
    ----------
    basis : IntMatrix
        Spanning rows of a lattice.
    vector : Sequence[int]
        A vector with ``basis.cols`` entries.

    Returns
    -------
    bool
        True if ``c @ basis == vector`` has an integer solution `c`.

    Raises
    ------
    ValueError
        If the vector has the wrong length.
    """
    if len(vector) != basis.cols:
        raise ValueError(f"expected {basis.cols} entries, got {shorten_list(vector)}")
    _, d, v = smith_normal_form(basis)
    # c @ u^-1 @ d == vector @ v
    w = (IntMatrix.from_rows([list(vector)], cols=basis.cols) @ v).entries[0]
    diag = d.diagonal()
    for j, x in enumerate(w):
        dj = diag[j] if j < len(diag) else 0
        if dj == 0:
            if x != 0:
                return False
        elif x % dj:
            return False
    return True
