import pytest

from immgate.algebra import FGAbelianGroup, IntMatrix
from immgate.diophantine import (
    QuadSystem, Solution, UnsatisfiableProof, decide, solve_within_bound
)
from immgate.obstruction import (
    ManifoldClassData,
    MiddleForms,
    ObstructionReport,
    Verdict,
    closed_embedding_obstruction,
    euler_square_problem,
    pontryagin_obstruction,
)
from immgate.util.error import (
    MissingClassData, NotApplicable, OddCodimension, SchemaError
)


Z = FGAbelianGroup.integers()


def with_middle(rows: list[list[int]], p2: tuple[int, ...] | None) -> ManifoldClassData:
    """An 8-manifold with the given cup form on H^4."""
    form = IntMatrix.from_rows(rows)
    return ManifoldClassData(
        m=8,
        cohomology={4: FGAbelianGroup(form.rows), 8: Z},
        pontryagin={} if p2 is None else {2: p2},
        middle=MiddleForms(4, (form,)),
    )


##########################
####    IMMERSIONS    ####
##########################


@pytest.mark.parametrize("n, witness", [(9, 1), (10, 2), (11, 2)])
def test_immersion_of_hp2_obstructed(hp2, n, witness):
    report = pontryagin_obstruction(hp2, n)
    assert report.verdict is Verdict.OBSTRUCTED
    assert report.witness_degree == witness
    assert not report.residual


@pytest.mark.parametrize("n", [12, 13, 20])
def test_immersion_of_hp2_empty_window(hp2, n):
    report = pontryagin_obstruction(hp2, n)
    assert report.verdict is Verdict.RATIONALLY_UNOBSTRUCTED
    assert report.window == ()
    assert "empty window" in report.notes
    assert report.residual


def test_sphere_is_unobstructed(sphere8):
    report = pontryagin_obstruction(sphere8, 9)
    assert report.window == (1, 2)
    assert report.verdict is Verdict.RATIONALLY_UNOBSTRUCTED
    assert report.to_json()["residual"] == "FiniteObstructionsNotComputed"


def test_missing_class_data():
    with pytest.raises(MissingClassData):
        pontryagin_obstruction(ManifoldClassData(m=8), 9)


def test_target_must_exceed_dimension(hp2):
    with pytest.raises(ValueError):
        pontryagin_obstruction(hp2, 8)
    with pytest.raises(ValueError):
        closed_embedding_obstruction(hp2, 7)


def test_torsion_is_reported():
    data = ManifoldClassData(
        m=8,
        cohomology={4: FGAbelianGroup(1, (2,)), 8: Z},
        pontryagin={1: (0,), 2: (0,)},
    )
    report = pontryagin_obstruction(data, 9)
    assert report.torsion_ignored == (1,)
    assert report.verdict is Verdict.RATIONALLY_UNOBSTRUCTED


##########################
####    EMBEDDINGS    ####
##########################


def test_closed_embedding_of_hp2(hp2):
    report = closed_embedding_obstruction(hp2, 12)
    assert report.verdict is Verdict.OBSTRUCTED
    assert report.witness_degree == 2
    assert report.vacuous == (3, 4)


def test_closed_embedding_vacuous_window(hp2):
    report = closed_embedding_obstruction(hp2, 16)
    assert report.verdict is Verdict.RATIONALLY_UNOBSTRUCTED
    assert report.window == ()
    assert report.vacuous == (4,)


def test_embedding_window_is_wider(hp2):
    # at codimension 2 the immersion test starts at p_2, the embedding test at p_1
    assert pontryagin_obstruction(hp2, 10).witness_degree == 2
    assert closed_embedding_obstruction(hp2, 10).witness_degree == 1


@pytest.mark.parametrize(
    "flags", [{"orientable": False}, {"closed": False}]
)
def test_closed_embedding_not_applicable(flags):
    data = ManifoldClassData(m=8, pontryagin={}, **flags)
    with pytest.raises(NotApplicable):
        closed_embedding_obstruction(data, 12)


def test_report_payload(hp2):
    doc = closed_embedding_obstruction(hp2, 12).to_json()
    assert doc["verdict"] == "Obstructed"
    assert doc["witness_degree"] == 2
    assert doc["residual"] is None
    assert doc["vacuous"] == [3, 4]


def test_report_requires_witness():
    with pytest.raises(ValueError):
        ObstructionReport(Verdict.OBSTRUCTED)
    with pytest.raises(ValueError):
        ObstructionReport(Verdict.RATIONALLY_UNOBSTRUCTED, witness_degree=1)


############################
####    EULER SQUARE    ####
############################


def test_euler_square_of_hp2(hp2):
    system = euler_square_problem(hp2, 12)
    assert system == QuadSystem.build(1, [([(1, 1, 1)], 7)], include_squares=True)
    assert decide(system, 5, mod_filter=4) == UnsatisfiableProof(modulus=4)


def test_euler_square_solvable():
    system = euler_square_problem(with_middle([[1]], (4,)), 12)
    outcome = solve_within_bound(system, 3)
    assert isinstance(outcome, Solution)
    assert outcome.assignment == (2,)


def test_euler_square_counts_pairs_once():
    system = euler_square_problem(with_middle([[0, 1], [1, 0]], (3,)), 12)
    assert system.equations[0].coeffs == ((1, 2, 1),)
    assert solve_within_bound(system, 3).assignment == (1, 3)


def test_euler_square_zero_form():
    system = euler_square_problem(with_middle([[0]], (3,)), 12)
    assert system.equations[0].coeffs == ()
    assert decide(system, 5).witness == "zero-form"


def test_euler_square_missing_pontryagin_is_zero():
    system = euler_square_problem(with_middle([[2]], None), 12)
    assert system.equations[0].target == 0
    assert solve_within_bound(system, 2).assignment == (0,)


def test_euler_square_errors(hp2, sphere8):
    with pytest.raises(OddCodimension):
        euler_square_problem(hp2, 11)
    with pytest.raises(MissingClassData):
        euler_square_problem(sphere8, 12)
    with pytest.raises(MissingClassData):
        euler_square_problem(hp2, 10)
    with pytest.raises(ValueError):
        euler_square_problem(hp2, 8)


######################
####    SCHEMA    ####
######################


def test_class_data_json_round_trip(hp2):
    doc = hp2.to_json()
    assert doc["cohomology"]["4"] == {"rank": 1, "torsion": []}
    assert doc["pontryagin"] == {"1": [2], "2": [7]}
    assert doc["middle"] == {"c": 4, "forms": [[[1]]]}
    assert ManifoldClassData.from_json(doc) == hp2


def test_pontryagin_class_defaults(sphere8):
    assert sphere8.pontryagin_class(1) == ()
    assert sphere8.pontryagin_class(3) == ()
    assert ManifoldClassData(m=8).pontryagin_class(1) is None


@pytest.mark.parametrize(
    "kwargs",
    [
        {"m": -1},
        {"m": 8, "cohomology": {9: Z}},
        {"m": 8, "pontryagin": {3: (1,)}},
        {"m": 8, "cohomology": {4: FGAbelianGroup(2)}, "pontryagin": {1: (1,)}},
        {
            "m": 8,
            "cohomology": {4: FGAbelianGroup(2), 8: Z},
            "middle": MiddleForms(4, (IntMatrix.from_rows([[1]]),)),
        },
    ],
)
def test_class_data_consistency(kwargs):
    with pytest.raises(SchemaError):
        ManifoldClassData(**kwargs)


def test_middle_forms_validation():
    with pytest.raises(SchemaError):
        MiddleForms(0)
    with pytest.raises(SchemaError):
        MiddleForms(2, (IntMatrix.from_rows([[0, 1], [2, 0]]),))
    with pytest.raises(SchemaError):
        MiddleForms(2, (IntMatrix.from_rows([[1]]), IntMatrix.from_rows([[1, 0], [0, 1]])))


def test_from_json_rejects_malformed():
    with pytest.raises(SchemaError):
        ManifoldClassData.from_json({"cohomology": {}})
    with pytest.raises(SchemaError):
        ManifoldClassData.from_json({"m": 8, "cohomology": {"x": {"rank": 1}}})
