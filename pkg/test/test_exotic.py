import hashlib

import pytest

from immgate.algebra import FGAbelianGroup, IntMatrix, QuadraticRefinement
from immgate.exotic import (
    bp_divisor_expression,
    bp_order,
    coker_j,
    kervaire_dimension,
    p_group,
    surgery_invariant,
    theta_assembly,
)
from immgate.tables import SphereTable, bundled_table_path
from immgate.util.error import (
    NonEvenForm,
    NonIntegralR,
    NonUnimodularForm,
    OutOfTable,
    TableFormatError,
    WrongParity,
)


HH = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
THETA_ORDERS = {
    1: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 1, 7: 28, 8: 2, 9: 8, 10: 6, 11: 992,
    12: 1, 13: 3, 14: 2, 15: 16256, 16: 2, 17: 16, 18: 16,
}


def cyclic(*orders: int) -> FGAbelianGroup:
    return FGAbelianGroup.from_orders(*orders)


@pytest.mark.parametrize("k, expected", sorted(THETA_ORDERS.items()))
def test_theta_orders(k, expected):
    assembly = theta_assembly(k)
    assert assembly.theta_order == expected
    assert assembly.bp.order * assembly.kernel_order == expected


def test_theta_7_is_all_boundaries():
    assembly = theta_assembly(7)
    assert assembly.bp == cyclic(28)
    assert assembly.coker_j == FGAbelianGroup.trivial()
    assert assembly.resolved_group == cyclic(28)


def test_theta_15_splits():
    assembly = theta_assembly(15)
    assert assembly.bp == cyclic(8128)
    assert assembly.coker_j == cyclic(2)
    assert assembly.resolved_group == cyclic(2, 8128)


def test_theta_payload():
    doc = theta_assembly(10).to_json()
    assert doc["coker_j"]["name"] == "Z/6"
    assert doc["kernel_order"] == 6
    assert doc["phi_image_order"] == 1
    assert doc["p_target"]["name"] == "Z/2"
    assert doc["resolved_group"]["name"] == "Z/6"


@pytest.mark.parametrize("k", [0, 19, 40])
def test_theta_out_of_window(k):
    with pytest.raises(OutOfTable):
        theta_assembly(k)


def test_theta_disagrees_with_table():
    body = bundled_table_path().read_bytes().partition(b"\n")[2]
    body = body.replace(b"THETA 7 28 28", b"THETA 7 56 2,28")
    header = f"SPHERETABLE v1 {hashlib.sha256(body).hexdigest()}\n".encode()
    table = SphereTable.parse(header + body)
    with pytest.raises(TableFormatError):
        theta_assembly(7, table)


@pytest.mark.parametrize(
    "k, expected",
    [
        (1, FGAbelianGroup.trivial()),
        (3, FGAbelianGroup.trivial()),
        (7, FGAbelianGroup.trivial()),
        (8, cyclic(2)),
        (9, cyclic(2, 2)),
        (10, cyclic(6)),
        (14, cyclic(2, 2)),
        (15, cyclic(2)),
    ],
)
def test_coker_j(k, expected):
    assert coker_j(k) == expected


@pytest.mark.parametrize(
    "kplus1, expected",
    [
        (2, 1),
        (4, 1),
        (6, 1),
        (8, 28),
        (9, 1),
        (10, 2),
        (12, 992),
        (14, 1),
        (16, 8128),
        (18, 2),
        (20, 261632),
        (30, 1),
    ],
)
def test_bp_order(kplus1, expected):
    assert bp_order(kplus1) == expected


def test_bp_order_bounds():
    with pytest.raises(ValueError):
        bp_order(1)
    with pytest.raises(OutOfTable):
        bp_order(32)


def test_bp_divisor_expression():
    assert bp_divisor_expression(8) == 16256
    assert bp_divisor_expression(8, "quarter") == 56
    # only the quarter reading is a multiple of |bP_8|
    assert bp_divisor_expression(8) % bp_order(8) != 0
    assert bp_divisor_expression(8, "quarter") % bp_order(8) == 0


def test_bp_divisor_expression_errors():
    with pytest.raises(NonIntegralR):
        bp_divisor_expression(6, "quarter")
    with pytest.raises(NonIntegralR):
        bp_divisor_expression(7)
    with pytest.raises(ValueError):
        bp_divisor_expression(8, "third")
    with pytest.raises(ValueError):
        bp_divisor_expression(0)


@pytest.mark.parametrize(
    "k, expected",
    [(1, FGAbelianGroup.trivial()), (2, cyclic(2)), (4, cyclic(0)), (7, cyclic(1))],
)
def test_p_group(k, expected):
    assert p_group(k) == expected


def test_p_group_rejects_zero():
    with pytest.raises(ValueError):
        p_group(0)


def test_kervaire_dimensions():
    assert [d for d in range(1, 130) if kervaire_dimension(d)] == [2, 6, 14, 30, 62, 126]


#######################
####    SURGERY    ####
#######################


def test_surgery_e8(e8):
    assert surgery_invariant(8, e8) == 1
    assert surgery_invariant(4, e8) == 1
    negated = IntMatrix.from_rows([[-x for x in row] for row in e8])
    assert surgery_invariant(8, negated) == -1


def test_surgery_hyperbolic():
    assert surgery_invariant(8, IntMatrix.from_rows(HH)) == 0


def test_surgery_arf():
    assert surgery_invariant(6, QuadraticRefinement(1, (1, 1))) == 1
    assert surgery_invariant(14, QuadraticRefinement(2, (1, 0, 0, 1))) == 0


def test_surgery_wrong_parity(e8):
    with pytest.raises(WrongParity):
        surgery_invariant(7, e8)
    with pytest.raises(WrongParity):
        surgery_invariant(6, e8)
    with pytest.raises(WrongParity):
        surgery_invariant(8, QuadraticRefinement(1, (1, 1)))


def test_surgery_form_checks():
    with pytest.raises(NonEvenForm):
        surgery_invariant(4, IntMatrix.from_rows([[1]]))
    with pytest.raises(NonUnimodularForm):
        surgery_invariant(4, IntMatrix.from_rows([[2]]))
    with pytest.raises(ValueError):
        surgery_invariant(4, IntMatrix.from_rows([[0, 1], [3, 0]]))
