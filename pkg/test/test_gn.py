import hashlib

import pytest

from immgate.algebra import FGAbelianGroup
from immgate.homotopy import (
    CaseTag,
    State,
    bg_infinite_dim,
    bg_stabilization_connectivity,
    phi_map,
    pi_gn,
)
from immgate.tables import SphereTable, bundled_table_path, stable_stem
from immgate.util.error import MissingCompositionData


Z = FGAbelianGroup.integers()


def cyclic(*orders: int) -> FGAbelianGroup:
    return FGAbelianGroup.from_orders(*orders)


@pytest.mark.parametrize("n", range(1, 15))
def test_two_components(n):
    result = pi_gn(n, 0)
    assert result.case_tag is CaseTag.K0
    assert result.resolved == cyclic(2)


def test_circle():
    result = pi_gn(2, 1)
    assert result.case_tag is CaseTag.K_EQ_N_MINUS_1_N_EVEN
    assert result.resolved == Z


@pytest.mark.parametrize("k", range(1, 11))
def test_stability(k):
    expected = stable_stem(k).order
    for n in range(k + 2, k + 9):
        result = pi_gn(n, k)
        assert result.state is State.RESOLVED
        assert result.order == expected


def test_stable_case_tag():
    assert pi_gn(10, 4).case_tag is CaseTag.STABLE
    assert pi_gn(10, 4).resolved == FGAbelianGroup.trivial()


def test_n_minus_2_with_n_odd():
    # the image of i_* is finite: Z/2 from pi_3(S^2) / 2Z
    result = pi_gn(3, 1)
    assert result.case_tag is CaseTag.K_EQ_N_MINUS_2_N_ODD
    assert result.resolved == cyclic(2)
    assert result.sub == cyclic(2)
    assert result.quotient == FGAbelianGroup.trivial()


def test_n_minus_1_with_n_even_splits():
    result = pi_gn(4, 3)
    assert result.case_tag is CaseTag.K_EQ_N_MINUS_1_N_EVEN
    assert result.quotient == Z
    assert result.sub == cyclic(12)
    assert result.resolved == cyclic(0, 12)
    assert "split: quotient is free" in result.notes


def test_n_minus_1_with_n_even_needs_no_composition_row():
    body = bundled_table_path().read_bytes().partition(b"\n")[2]
    assert b"CMP 6 5 1\n" in body
    body = body.replace(b"CMP 6 5 1\n", b"")
    digest = hashlib.sha256(body).hexdigest()
    table = SphereTable.parse(f"SPHERETABLE v1 {digest}\n".encode() + body)
    with pytest.raises(MissingCompositionData):
        phi_map(6, 5, table)
    result = pi_gn(6, 5, table)
    assert result.case_tag is CaseTag.K_EQ_N_MINUS_1_N_EVEN
    assert result.state is State.RESOLVED
    assert result.quotient == Z
    assert result.resolved == pi_gn(6, 5).resolved == Z


def test_2n_minus_3_with_n_odd_reports_bounds():
    result = pi_gn(3, 3)
    assert result.case_tag is CaseTag.K_EQ_2N_MINUS_3_N_ODD
    assert result.quotient == Z
    assert result.state is State.BOUNDS
    assert result.sub is None
    assert result.sub_bound == cyclic(2)
    assert result.order is None


def test_exactness_arithmetic():
    for n in range(2, 13):
        for k in range(1, 11):
            try:
                result = pi_gn(n, k)
            except MissingCompositionData:
                continue
            if result.state is State.RESOLVED and result.sub is not None:
                parts = (result.sub.order, result.quotient.order, result.resolved.order)
                if None not in parts:
                    assert parts[0] * parts[1] == parts[2]


def test_json_payload():
    doc = pi_gn(4, 3).to_json()
    assert doc["state"] == "resolved"
    assert doc["case_tag"] == "k_eq_n_minus_1_n_even"
    assert doc["resolved"]["name"] == "Z + Z/12"
    assert doc["ses"]["quotient"]["name"] == "Z"
    assert doc["order"] is None


def test_phi_map_zero_cases():
    # pi_1(S^2) = 0
    assert phi_map(3, 1).is_zero
    # [i_3, i_3] = 0
    for k in range(1, 8):
        assert phi_map(4, k).is_zero


def test_phi_map_whitehead_square():
    # [i_2, i_2] is twice the Hopf map
    f = phi_map(3, 2)
    assert f.matrix.to_list() == [[2]]
    assert f.cokernel() == cyclic(2)


def test_phi_map_missing_composition():
    with pytest.raises(MissingCompositionData):
        phi_map(3, 3)


@pytest.mark.parametrize("n, k", [(0, 1), (2, -1)])
def test_pi_gn_rejects_bad_degrees(n, k):
    with pytest.raises(ValueError):
        pi_gn(n, k)


@pytest.mark.parametrize("codim, expected", [(2, 2), (3, 4), (4, 4), (5, 8)])
def test_bg_infinite_dim(codim, expected):
    assert bg_infinite_dim(codim) == expected


def test_bg_stabilization_connectivity():
    assert bg_stabilization_connectivity(2) == 0
    assert bg_stabilization_connectivity(7) == 5
    with pytest.raises(ValueError):
        bg_stabilization_connectivity(1)
    with pytest.raises(ValueError):
        bg_infinite_dim(1)
