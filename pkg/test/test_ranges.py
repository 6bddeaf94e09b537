import itertools
from fractions import Fraction

import pandas as pd
import pytest

from immgate.ranges import (
    Category,
    Kind,
    ProblemSpec,
    Stabilization,
    Status,
    chart,
    classify_embedding,
    classify_immersion,
    embedding_range,
    embedding_stabilization,
    immersion_range,
    sweep,
)
from immgate.util.error import InvalidCodimension


BOUNDARY_FLAGS = [(False, False), (True, False), (False, True)]


def immersion_oracle(m: int, n: int, category: Category) -> Status:
    """Statuses restated category by category, with ratios of m to n."""
    codim = n - m
    if category is Category.PL_GENERAL:
        return Status.DECIDABLE
    if category is Category.PL_LOCALLY_FLAT:
        if codim != 2:
            return Status.DECIDABLE
        return Status.UNDECIDABLE if n >= 10 else Status.OPEN
    if Fraction(m) < Fraction(n, 2) + 1:
        return Status.ALWAYS_YES
    if codim % 2 == 1 or Fraction(3 * m + 1, 2 * n) <= 1:
        return Status.DECIDABLE
    if Fraction(m, n) >= Fraction(4, 5):
        if codim == 2 and n < 10:
            return Status.OPEN
        return Status.UNDECIDABLE
    return Status.OPEN


def embedding_oracle(
    m: int, n: int, category: Category, with_boundary: bool
) -> Status:
    ratio = Fraction(m, n)
    if ratio <= Fraction(1, 2):
        return Status.ALWAYS_YES
    if Fraction(3 * m + 3, 2 * n) <= 1:
        return Status.DECIDABLE
    if (
        category is Category.SMOOTH
        and (n - m) % 2 == 0
        and Fraction(11 * m - 1, 10 * n) >= 1
        and with_boundary
    ):
        return Status.UNDECIDABLE
    return Status.OPEN


##########################
####    IMMERSIONS    ####
##########################


@pytest.mark.parametrize(
    "m, n, category, expected",
    [
        (4, 9, Category.SMOOTH, Status.ALWAYS_YES),
        (7, 8, Category.SMOOTH, Status.DECIDABLE),
        (8, 11, Category.SMOOTH, Status.DECIDABLE),
        (6, 10, Category.SMOOTH, Status.DECIDABLE),
        (8, 10, Category.SMOOTH, Status.UNDECIDABLE),
        (16, 20, Category.SMOOTH, Status.UNDECIDABLE),
        (10, 14, Category.SMOOTH, Status.OPEN),
        (7, 9, Category.SMOOTH, Status.OPEN),
        (8, 10, Category.PL_LOCALLY_FLAT, Status.UNDECIDABLE),
        (6, 8, Category.PL_LOCALLY_FLAT, Status.OPEN),
        (6, 8, Category.PL_GENERAL, Status.DECIDABLE),
        (16, 20, Category.PL_GENERAL, Status.DECIDABLE),
        (7, 15, Category.PL_GENERAL, Status.DECIDABLE),
        (7, 15, Category.PL_LOCALLY_FLAT, Status.DECIDABLE),
        (3, 5, Category.PL_LOCALLY_FLAT, Status.OPEN),
        (3, 5, Category.SMOOTH, Status.ALWAYS_YES),
    ],
)
def test_immersion_spot_values(m, n, category, expected):
    verdict = classify_immersion(ProblemSpec(m, n, category=category))
    assert verdict.status is expected


def test_codimension_two_tag():
    verdict = classify_immersion(ProblemSpec(8, 10))
    assert "codim-2-n-ge-10" in verdict.tags
    assert verdict.citation == "even-codimension-euler-square"
    assert verdict.range == "codimension 2"


def test_pl_verdicts_report_connectivity():
    verdict = classify_immersion(ProblemSpec(9, 16, category=Category.PL_GENERAL))
    assert any("5-connected" in note for note in verdict.notes)


def test_non_orientable_is_tagged():
    oriented = classify_immersion(ProblemSpec(8, 10))
    verdict = classify_immersion(ProblemSpec(8, 10, orientable=False))
    assert verdict.status is oriented.status
    assert "equivariant" in verdict.tags


@pytest.mark.parametrize(
    "spec",
    [
        ProblemSpec(2, 3),
        ProblemSpec(0, 6),
        ProblemSpec(6, 6),
        ProblemSpec(8, 10, with_boundary=True, closed=True),
    ],
)
def test_immersion_out_of_scope(spec):
    verdict = classify_immersion(spec)
    assert verdict.status is Status.OUT_OF_SCOPE
    assert verdict.notes


@pytest.mark.parametrize("category", list(Category))
@pytest.mark.parametrize("orientable", [True, False])
def test_immersion_sweep_matches_oracle(category, orientable):
    frame = sweep(4, 60, Kind.IMMERSION, category, orientable)
    assert len(frame) == sum(n - 1 for n in range(4, 61))
    for row in frame.itertuples(index=False):
        assert row.status == immersion_oracle(row.m, row.n, category).value


##########################
####    EMBEDDINGS    ####
##########################


@pytest.mark.parametrize(
    "m, n, expected",
    [
        (5, 10, Status.ALWAYS_YES),
        (5, 9, Status.DECIDABLE),
        (6, 10, Status.OPEN),
        (21, 23, Status.OPEN),
    ],
)
def test_embedding_spot_values(m, n, expected):
    assert classify_embedding(ProblemSpec(m, n, Kind.EMBEDDING)).status is expected


def test_embedding_with_boundary_is_undecidable():
    spec = ProblemSpec(21, 23, Kind.EMBEDDING, with_boundary=True)
    verdict = classify_embedding(spec)
    assert verdict.status is Status.UNDECIDABLE
    assert verdict.range == "above ten-elevenths"


def test_closed_embedding_stays_open():
    verdict = classify_embedding(ProblemSpec(21, 23, Kind.EMBEDDING, closed=True))
    assert verdict.status is Status.OPEN
    assert verdict.citation == "closed-embedding-euler-class"


def test_embedding_codimension_zero_band():
    spec = ProblemSpec(12, 12, Kind.EMBEDDING, with_boundary=True)
    assert classify_embedding(spec).status is Status.UNDECIDABLE


@pytest.mark.parametrize(
    "spec",
    [
        ProblemSpec(0, 5, Kind.EMBEDDING),
        ProblemSpec(7, 6, Kind.EMBEDDING),
        ProblemSpec(21, 23, Kind.EMBEDDING, with_boundary=True, closed=True),
    ],
)
def test_embedding_out_of_scope(spec):
    assert classify_embedding(spec).status is Status.OUT_OF_SCOPE


@pytest.mark.parametrize("category", list(Category))
@pytest.mark.parametrize("with_boundary, closed", BOUNDARY_FLAGS)
def test_embedding_sweep_matches_oracle(category, with_boundary, closed):
    frame = sweep(4, 60, Kind.EMBEDDING, category, True, with_boundary, closed)
    assert len(frame) == sum(range(4, 61))
    for row in frame.itertuples(index=False):
        expected = embedding_oracle(row.m, row.n, category, with_boundary)
        assert row.status == expected.value


def test_sweep_consistency():
    for n, m in itertools.product(range(4, 41), range(1, 40)):
        if m >= n:
            continue
        embedding = classify_embedding(ProblemSpec(m, n, Kind.EMBEDDING))
        immersion = [
            classify_immersion(ProblemSpec(m, n, category=category)).status
            for category in Category
        ]
        # an embedding is an immersion
        if embedding.status is Status.ALWAYS_YES:
            assert immersion[0] is Status.ALWAYS_YES
        assert Status.ALWAYS_YES not in immersion[1:]
        assert immersion[2] is not Status.UNDECIDABLE


#############################
####    STABILIZATION    ####
#############################


def test_stabilization_of_codimension_two():
    assert embedding_stabilization(8, 10) == Stabilization(13, 21, 23)
    assert embedding_stabilization(3, 10) == Stabilization(1, 4, 11)
    assert embedding_stabilization(3, 10).to_json() == {"k": 1, "m": 4, "n": 11}


@pytest.mark.parametrize("c", range(2, 21, 2))
def test_stabilization_carries_undecidability(c):
    assert classify_immersion(ProblemSpec(4 * c, 5 * c)).status is Status.UNDECIDABLE
    stab = embedding_stabilization(4 * c, 5 * c)
    assert stab == Stabilization(6 * c + 1, 10 * c + 1, 11 * c + 1)
    spec = ProblemSpec(stab.m, stab.n, Kind.EMBEDDING, with_boundary=True)
    assert classify_embedding(spec).status is Status.UNDECIDABLE


def test_stabilization_needs_codimension_two():
    with pytest.raises(InvalidCodimension):
        embedding_stabilization(5, 6)


#####################
####    BANDS    ####
#####################


@pytest.mark.parametrize(
    "m, n, expected",
    [
        (7, 15, "stable"),
        (7, 8, "codimension 1"),
        (8, 10, "codimension 2"),
        (6, 10, "metastable"),
        (10, 14, "two-thirds to four-fifths"),
        (16, 20, "four-fifths to codimension 3"),
    ],
)
def test_immersion_range(m, n, expected):
    assert immersion_range(m, n) == expected


@pytest.mark.parametrize(
    "m, n, expected",
    [
        (5, 10, "stable"),
        (5, 9, "metastable"),
        (6, 10, "two-thirds to ten-elevenths"),
        (21, 23, "above ten-elevenths"),
    ],
)
def test_embedding_range(m, n, expected):
    assert embedding_range(m, n) == expected


def test_category_flags():
    assert Category.from_flag("pl-flat") is Category.PL_LOCALLY_FLAT
    assert Category.from_flag("SMOOTH") is Category.SMOOTH
    with pytest.raises(ValueError):
        Category.from_flag("topological")


#####################
####    SWEEP    ####
#####################


def test_sweep_layout():
    frame = sweep(4, 6)
    assert list(frame.columns) == [
        "m", "n", "codim", "status", "method", "citation", "range", "tags"
    ]
    assert tuple(frame.iloc[0][["m", "n"]]) == (1, 4)
    assert (frame["codim"] == frame["n"] - frame["m"]).all()


def test_chart():
    grid = chart(sweep(4, 6))
    assert grid.shape == (5, 3)
    assert grid.loc[4, 6] == Status.OPEN.value
    assert pd.isna(grid.loc[4, 4])
    assert grid.loc[1, 4] == Status.ALWAYS_YES.value


def test_sweep_rejects_bad_range():
    with pytest.raises(ValueError):
        sweep(10, 4)
    with pytest.raises(ValueError):
        sweep(0, 4)
