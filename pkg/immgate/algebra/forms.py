"""Signatures of symmetric integer forms and Arf invariants of Z/2 quadratic forms."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..util.error import Degenerate
from .matrix import IntMatrix


def signature(form: IntMatrix) -> int:
    """The signature (positive minus negative eigenvalue count) of a form.

    Parameters
    ----------
    form : IntMatrix
        A symmetric, non-degenerate integer matrix.

    Returns
    -------
    int
        ``n_+ - n_-``.

    Raises
    ------
    ValueError
        If the matrix is not symmetric.
    Degenerate
        If the determinant is zero.

    Notes
    -----
    The form is diagonalized by congruence over the rationals.  Each pivot is
    a ratio of consecutive leading principal minors whenever those are nonzero;
    a zero pivot is repaired by a symmetric swap or by adding a neighbouring
    basis vector, neither of which changes the signature.
    """
    if not form.is_symmetric():
        raise ValueError("signature requires a symmetric matrix")
    n = form.rows
    a = [[Fraction(x) for x in row] for row in form.entries]
    positive = negative = 0

    for t in range(n):
        if a[t][t] == 0:
            swap = next((i for i in range(t + 1, n) if a[i][i] != 0), None)
            if swap is not None:
                a[t], a[swap] = a[swap], a[t]
                for row in a:
                    row[t], row[swap] = row[swap], row[t]
            else:
                partner = next((j for j in range(t + 1, n) if a[t][j] != 0), None)
                if partner is None:
                    raise Degenerate(
                        f"form is degenerate (zero row {t} after reduction)"
                    )
                # e_t -> e_t + e_partner; new diagonal is 2 * a[t][partner]
                for j in range(n):
                    a[t][j] += a[partner][j]
                for row in a:
                    row[t] += row[partner]

        pivot = a[t][t]
        for i in range(t + 1, n):
            factor = a[i][t] / pivot
            if factor:
                for j in range(t, n):
                    a[i][j] -= factor * a[t][j]
                for row in a:
                    row[i] -= factor * row[t]
        if pivot > 0:
            positive += 1
        else:
            negative += 1

    return positive - negative


@dataclass(frozen=True)
class QuadraticRefinement:
    """A quadratic refinement of the hyperbolic form on ``(Z/2)^(2g)``.

    `values` lists ``q`` on the symplectic basis in the order
    ``a_1, b_1, ..., a_g, b_g`` with ``<a_i, b_i> = 1``.
    """

    genus: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValueError(f"genus must be non-negative, not {self.genus}")
        if len(self.values) != 2 * self.genus:
            raise ValueError(
                f"genus {self.genus} needs {2 * self.genus} values, "
                f"got {len(self.values)}"
            )
        if any(v not in (0, 1) for v in self.values):
            raise ValueError(f"refinement values must be 0 or 1: {self.values}")

    def pairs(self) -> list[tuple[int, int]]:
        """``(q(a_i), q(b_i))`` for each symplectic pair."""
        return [
            (self.values[2 * i], self.values[2 * i + 1]) for i in range(self.genus)
        ]

    def evaluate(self, vector: tuple[int, ...]) -> int:
        """``q`` on an arbitrary element, via ``q(x+y) = q(x) + q(y) + <x, y>``."""
        if len(vector) != 2 * self.genus:
            raise ValueError(f"expected {2 * self.genus} coordinates")
        total = 0
        for i, (qa, qb) in enumerate(self.pairs()):
            x, y = vector[2 * i] % 2, vector[2 * i + 1] % 2
            total += x * qa + y * qb + x * y
        return total % 2


def arf_invariant(q: QuadraticRefinement) -> int:
    """The Arf invariant ``sum q(a_i) q(b_i) mod 2``."""
    return sum(qa * qb for qa, qb in q.pairs()) % 2
