import pytest

from immgate.algebra import (
    FGAbelianGroup,
    Homomorphism,
    IntMatrix,
    coprime,
    group_from_presentation,
    subgroup_generated,
)


Z = FGAbelianGroup.integers()
ZERO = FGAbelianGroup.trivial()


def cyclic(*orders: int) -> FGAbelianGroup:
    return FGAbelianGroup.from_orders(*orders)


@pytest.mark.parametrize(
    "generators, relations, expected",
    [
        (2, [], FGAbelianGroup(2)),
        (1, [[2]], FGAbelianGroup(0, (2,))),
        (2, [[2, 0], [0, 3]], FGAbelianGroup(0, (6,))),
        (2, [[1, 1]], FGAbelianGroup(1)),
        (3, [[2, 4, 0]], FGAbelianGroup(2, (2,))),
    ],
)
def test_group_from_presentation(generators, relations, expected):
    matrix = IntMatrix.from_rows(relations, cols=generators)
    assert group_from_presentation(generators, matrix) == expected


def test_presentation_column_mismatch():
    with pytest.raises(ValueError):
        group_from_presentation(3, IntMatrix.from_rows([[1, 2]]))


def test_invariant_factor_normal_form():
    assert cyclic(2, 3) == cyclic(6)
    assert cyclic(4, 6) == FGAbelianGroup(0, (2, 12))
    assert cyclic(0, 1, 0) == FGAbelianGroup(2)
    with pytest.raises(ValueError):
        FGAbelianGroup(0, (4, 6))
    with pytest.raises(ValueError):
        FGAbelianGroup(0, (1,))
    with pytest.raises(ValueError):
        cyclic(-2)


def test_group_properties():
    g = cyclic(0, 4, 6)
    assert str(g) == "Z + Z/2 + Z/12"
    assert g.order is None
    assert g.generator_count == 3
    assert not g.is_finite
    assert cyclic(2, 2).order == 4
    assert ZERO.is_trivial and str(ZERO) == "0"
    assert FGAbelianGroup(3).is_free


@pytest.mark.parametrize(
    "text",
    ["0", "Z", "Z^3", "Z/2 + Z/12", "Z + Z/2^3", "Z^2 + Z/6 + Z/30"],
)
def test_parse_round_trips(text):
    group = FGAbelianGroup.parse(text)
    assert FGAbelianGroup.parse(str(group)) == group


def test_parse_normalizes():
    assert FGAbelianGroup.parse("Z/2 + Z/3") == cyclic(6)
    assert FGAbelianGroup.parse("Z/2^3") == FGAbelianGroup(0, (2, 2, 2))
    with pytest.raises(ValueError):
        FGAbelianGroup.parse("Q")


def test_elementary_divisors():
    assert FGAbelianGroup(0, (2, 12)).elementary_divisors() == (2, 3, 4)
    assert cyclic(240).elementary_divisors() == (3, 5, 16)
    assert Z.elementary_divisors() == ()


def test_direct_sum():
    assert cyclic(2).direct_sum(cyclic(3), Z) == FGAbelianGroup(1, (6,))


def test_json_round_trip():
    g = cyclic(0, 2, 8)
    doc = g.to_json()
    assert doc == {"rank": 1, "torsion": [2, 8], "name": "Z + Z/2 + Z/8"}
    assert FGAbelianGroup.from_json(doc) == g
    assert FGAbelianGroup.from_json({"rank": 0, "torsion": [3, 2]}) == cyclic(6)


def test_multiplication_by_two_on_z():
    f = Homomorphism(Z, Z, IntMatrix.from_rows([[2]]))
    assert f.kernel() == ZERO
    assert f.image() == Z
    assert f.cokernel() == cyclic(2)
    assert f.apply([3]) == (6,)


def test_reduction_z4_to_z2():
    f = Homomorphism(cyclic(4), cyclic(2), IntMatrix.from_rows([[1]]))
    assert f.kernel() == cyclic(2)
    assert f.image() == cyclic(2)
    assert f.cokernel() == ZERO
    assert not f.is_zero


def test_zero_homomorphism():
    f = Homomorphism.zero(cyclic(2), cyclic(0, 12))
    assert f.is_zero
    assert f.kernel() == cyclic(2)
    assert f.cokernel() == cyclic(0, 12)


def test_homomorphism_must_respect_orders():
    # a generator of order 2 cannot map to a generator of Z
    with pytest.raises(ValueError):
        Homomorphism(cyclic(2), Z, IntMatrix.from_rows([[1]]))
    with pytest.raises(ValueError):
        Homomorphism(Z, Z, IntMatrix.from_rows([[1, 0]]))


def test_subgroup_generated():
    # <(2, 0), (0, 3)> inside Z/4 + Z/6
    relations = IntMatrix.from_rows([[4, 0], [0, 6]])
    elements = IntMatrix.from_rows([[2, 0], [0, 3]])
    assert subgroup_generated(elements, relations) == FGAbelianGroup(0, (2, 2))


def test_coprime():
    assert coprime(cyclic(4), cyclic(9))
    assert not coprime(cyclic(4), cyclic(6))
    assert not coprime(Z, cyclic(3))
