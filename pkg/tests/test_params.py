import pytest

from tlcell.params import (
    AlgebraParams,
    BadQuantumChar,
    ChargeCollision,
    NotDivisible,
    ParamError,
    validate_params,
)


def test_valid_spec_example():
    vp = validate_params(AlgebraParams(6, 3, 4, 0, (0, 5)))
    assert (vp.r, vp.p, vp.n, vp.e, vp.charges) == (6, 3, 4, 0, (0, 5))
    assert vp.d == 2


def test_not_divisible():
    with pytest.raises(NotDivisible):
        validate_params(AlgebraParams(6, 4, 3, 0, (0, 5)))


@pytest.mark.parametrize("e", [1, 2, 3])
def test_bad_quantum_char(e):
    with pytest.raises(BadQuantumChar):
        validate_params(AlgebraParams(2, 1, 3, e, (0, 5)))


def test_charge_collision_adjacent():
    with pytest.raises(ChargeCollision) as excinfo:
        validate_params(AlgebraParams(2, 1, 3, 0, (0, 1)))
    assert "j_" in str(excinfo.value)


def test_charge_collision_u_condition():
    # p * delta = 2 is forbidden even when the plain gap is fine
    with pytest.raises(ChargeCollision):
        validate_params(AlgebraParams(2, 1, 4, 0, (0, 2)))
    # ... and the same pair is fine at p = 2
    vp = validate_params(AlgebraParams(4, 2, 4, 0, (0, 2)))
    assert vp.charges == (0, 2)


def test_charge_collision_mod_e_wraparound():
    # delta = 3 mod 5 has p * (-delta) = 2 mod 5
    with pytest.raises(ChargeCollision):
        validate_params(AlgebraParams(2, 1, 3, 5, (0, 3)))


def test_charges_reduced_mod_e():
    vp = validate_params(AlgebraParams(2, 2, 3, 5, (7,)))
    assert vp.charges == (2,)


def test_idempotent_revalidation():
    vp = validate_params(AlgebraParams(6, 3, 4, 9, (0, 4)))
    again = validate_params(vp.to_raw())
    assert again == vp
    assert validate_params(vp) == vp


def test_wrong_charge_count():
    with pytest.raises(ParamError):
        validate_params(AlgebraParams(6, 3, 4, 0, (0,)))


def test_charge_multiplicity_rejected():
    with pytest.raises(ChargeCollision):
        validate_params(AlgebraParams(4, 2, 3, 0, (0, 0)))


def test_from_dict_unknown_field():
    with pytest.raises(ParamError):
        AlgebraParams.from_dict({"r": 2, "p": 1, "n": 2, "e": 0, "charges": [0], "x": 1})


def test_nonint_rejected():
    with pytest.raises(ParamError):
        validate_params(AlgebraParams(2, 1, 2, 0, (0.5,)))


def test_residue_pairs_distinct_at_fixed_layer():
    # the separation invariant makes the 2d first-two-row residues distinct
    from tlcell.combinatorics import FloorIndex, Node, residue_of_node

    vp = validate_params(AlgebraParams(6, 3, 4, 9, (0, 4)))
    residues = set()
    for l in range(vp.d):
        for row in (1, 2):
            residues.add(residue_of_node(Node(row, FloorIndex(0, l)), vp))
    assert len(residues) == 2 * vp.d
