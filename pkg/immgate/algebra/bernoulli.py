"""Bernoulli numbers in the topologist's convention.

``bernoulli(r)`` is the positive rational usually written ``|B_{2r}|`` in
modern notation, so that ``bernoulli(1) = 1/6`` and ``bernoulli(2) = 1/30``.
Values are exact :class:`fractions.Fraction` objects.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb


@lru_cache(maxsize=None)
def _even(m: int) -> Fraction:
    # modern B_{2m} from sum_{j<=n} C(n+1, j) B_j = 0 with B_1 = -1/2
    if m == 0:
        return Fraction(1)
    n = 2 * m
    total = Fraction(-(n + 1), 2)
    for j in range(m):
        total += comb(n + 1, 2 * j) * _even(j)
    return -total / (n + 1)


def bernoulli(r: int) -> Fraction:
    """Get the r-th Bernoulli number in the topologist's convention.

    Parameters
    ----------
    r : int
        A positive index.

    Returns
    -------
    Fraction
        ``|B_{2r}|``, always positive.

    Raises
    ------
    ValueError
        If `r` is less than 1.

    Examples
    --------
    >>> bernoulli(1), bernoulli(4), bernoulli(6)
    (Fraction(1, 6), Fraction(1, 30), Fraction(691, 2730))
    """
    if r < 1:
        raise ValueError(f"Bernoulli index must be >= 1, not {r}")
    return abs(_even(r))
