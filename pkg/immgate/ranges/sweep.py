"""Tabulate the classifier over a grid of dimensions."""
from __future__ import annotations

import pandas as pd
from tqdm import tqdm

from ..env.messages import VERBOSE, verbosity
from .classify import (
    Category,
    Kind,
    ProblemSpec,
    classify_embedding,
    classify_immersion,
)


BAR_COLOR = "#bfbfbf"
BAR_FORMAT = "{l_bar}{bar}| [{elapsed}, {rate_fmt}{postfix}]"
COLUMNS = ["m", "n", "codim", "status", "method", "citation", "range", "tags"]


def sweep(
    n_min: int = 4,
    n_max: int = 60,
    kind: Kind = Kind.IMMERSION,
    category: Category = Category.SMOOTH,
    orientable: bool = True,
    with_boundary: bool = False,
    closed: bool = False,
) -> pd.DataFrame:
    """Classify every ``(m, n)`` with ``n_min <= n <= n_max``.

    Parameters
    ----------
    n_min, n_max : int
        The range of target dimensions, inclusive.
    kind : Kind, default Kind.IMMERSION
        Immersion (``1 <= m < n``) or embedding (``1 <= m <= n``).
    category : Category, default Category.SMOOTH
        The category of maps.
    orientable, with_boundary, closed : bool
        Flags passed to every :class:`ProblemSpec`.

    Returns
    -------
    pandas.DataFrame
        One row per pair in long form, ordered by ``n`` then ``m``.  A progress
        bar is drawn on stderr at verbosity 2 or higher.

    Raises
    ------
    ValueError
        If ``n_min > n_max`` or ``n_min < 1``.
    """
    if n_min < 1 or n_min > n_max:
        raise ValueError(f"invalid range of n: {n_min}..{n_max}")
    classify = classify_immersion if kind is Kind.IMMERSION else classify_embedding
    top = (lambda n: n - 1) if kind is Kind.IMMERSION else (lambda n: n)
    pairs = [(m, n) for n in range(n_min, n_max + 1) for m in range(1, top(n) + 1)]

    records = []
    for m, n in tqdm(
        pairs,
        desc=f"{kind.value} ({category.value})",
        colour=BAR_COLOR,
        bar_format=BAR_FORMAT,
        disable=verbosity() < VERBOSE,
    ):
        verdict = classify(
            ProblemSpec(m, n, kind, category, orientable, with_boundary, closed)
        )
        records.append(
            {
                "m": m,
                "n": n,
                "codim": n - m,
                "status": verdict.status.value,
                "method": verdict.method,
                "citation": verdict.citation,
                "range": verdict.range,
                "tags": ",".join(verdict.tags),
            }
        )
    return pd.DataFrame.from_records(records, columns=COLUMNS)


def chart(frame: pd.DataFrame) -> pd.DataFrame:
    """Pivot a sweep into an ``m x n`` grid of statuses (missing pairs are NaN)."""
    return frame.pivot(index="m", columns="n", values="status")
