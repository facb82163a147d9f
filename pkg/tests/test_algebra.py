"""Group arithmetic, group-algebra elements, characters, representations."""

import math
import random

import numpy as np
import pytest

from voltlift import (
    AbelianGroup,
    Character,
    GenericGroup,
    GroupAlgebraElement,
    IncompleteRepresentation,
    MismatchedGroups,
    Representation,
    VoltliftError,
    check_representation,
    enumerate_characters,
    group_from_json,
    irreps_completeness_defect,
)

from helpers import s3_group_and_irreps

Z5 = AbelianGroup(5)
Z7 = AbelianGroup(7)
Z33 = AbelianGroup(3, 3)


def mono(group, key, coeff=1):
    return GroupAlgebraElement.from_element(group.element(key), coeff)


def test_group_op_z5():
    assert Z5.element(3) * Z5.element(4) == Z5.element(2)


def test_group_op_z3z3_inverse_pair():
    assert Z33.element((2, 1)) * Z33.element((1, 2)) == Z33.identity


def test_element_normalization_and_index():
    el = Z33.element((5, -1))
    assert el.key == (2, 2)
    assert el.index == 8
    assert Z33.elements()[8] == el


def test_generic_group_matches_abelian_on_all_pairs():
    generic = GenericGroup.from_group(Z5)
    for a in range(5):
        for b in range(5):
            left = generic.op(generic.element(a), generic.element(b)).key
            right = Z5.op(Z5.element(a), Z5.element(b)).index
            assert left == right
    assert generic.is_abelian


def test_mismatched_groups_raises():
    with pytest.raises(MismatchedGroups):
        Z5.element(1) * Z7.element(1)


def test_generic_group_rejects_non_latin():
    with pytest.raises(VoltliftError):
        GenericGroup([[0, 1], [0, 1]])


def test_generic_group_rejects_no_identity():
    # subtraction mod 3 is a Latin square with only a right identity
    table = [[(a - b) % 3 for b in range(3)] for a in range(3)]
    with pytest.raises(VoltliftError):
        GenericGroup(table)


def test_generic_group_rejects_non_associative_loop():
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(VoltliftError, match="associative"):
        GenericGroup(table)


def test_group_json_round_trip():
    for group in (Z33, GenericGroup.from_group(Z5)):
        again = group_from_json(group.to_json())
        assert again == group


def test_algebra_add():
    a = mono(Z5, 1) + mono(Z5, -1)
    b = mono(Z5, 1, -1)
    assert a + b == mono(Z5, -1)


def test_algebra_mul_wraparound():
    assert mono(Z5, 1) * mono(Z5, 4) == GroupAlgebraElement.one(Z5)


def test_algebra_mul_expansion_z7():
    left = GroupAlgebraElement.one(Z7) + mono(Z7, 1)
    right = GroupAlgebraElement.one(Z7) + mono(Z7, -1)
    expected = mono(Z7, -1) + mono(Z7, 0, 2) + mono(Z7, 1)
    assert left * right == expected


def test_algebra_drops_zero_coefficients():
    a = mono(Z5, 2) - mono(Z5, 2)
    assert a.is_zero
    assert a.terms == {}


def test_enumerate_characters_counts():
    assert len(enumerate_characters(Z5)) == 5
    assert len(enumerate_characters(Z33)) == 9
    assert len(enumerate_characters(AbelianGroup(2, 4))) == 8


def test_enumerate_characters_order():
    chars = enumerate_characters(Z33)
    assert chars[0].is_trivial
    assert [c.index for c in chars[:4]] == [(0, 0), (0, 1), (0, 2), (1, 0)]


def test_evaluate_trivial_character():
    p = mono(Z5, 1) + mono(Z5, -1)
    chi0 = Character(Z5, 0)
    assert p.evaluate(chi0) == pytest.approx(2.0)


def test_evaluate_primitive_character():
    p = mono(Z5, 2) + mono(Z5, -2)
    chi = Character(Z5, 1)
    assert p.evaluate(chi) == pytest.approx(2 * math.cos(4 * math.pi / 5), abs=1e-12)


def test_evaluate_row_entry_at_trivial():
    p = (GroupAlgebraElement.one(Z5) + mono(Z5, 1) + mono(Z5, -1) + mono(Z5, -2))
    assert p.evaluate(Character(Z5, 0)) == pytest.approx(4.0)


def test_evaluate_is_multiplicative():
    rng = random.Random(7)
    for group in (Z5, Z33, AbelianGroup(2, 4)):
        els = group.elements()
        chars = enumerate_characters(group)
        for _ in range(20):
            p = GroupAlgebraElement(
                group,
                {els[rng.randrange(len(els))]: rng.randint(-3, 3) for _ in range(3)},
            )
            q = GroupAlgebraElement(
                group,
                {els[rng.randrange(len(els))]: rng.randint(-3, 3) for _ in range(3)},
            )
            chi = chars[rng.randrange(len(chars))]
            assert (p * q).evaluate(chi) == pytest.approx(
                p.evaluate(chi) * q.evaluate(chi), abs=1e-12
            )


def test_character_orthogonality():
    for group in (Z5, Z33, AbelianGroup(2, 4)):
        for chi in enumerate_characters(group):
            total = sum(chi(g) for g in group.elements())
            if chi.is_trivial:
                assert total == pytest.approx(group.size)
            else:
                assert abs(total) < 1e-10


def test_inverse_image():
    p = mono(Z5, 1) + mono(Z5, 2, 3)
    assert p.inverse_image() == mono(Z5, 4) + mono(Z5, 3, 3)


def test_monomial_rendering():
    p = GroupAlgebraElement.one(Z5) + mono(Z5, 1) + mono(Z5, -1) + mono(Z5, -2)
    assert p.monomial_str() == "1 + 1/z + z + 1/z^2"
    q = mono(Z33, (1, 0)) + mono(Z33, (1, 2))
    assert q.monomial_str() == "z1 + z1/z2"


def test_trivial_representation_passes():
    rep = Representation.trivial(Z5)
    assert check_representation(Z5, rep).passed


def test_character_as_representation_passes():
    for chi in enumerate_characters(Z5):
        rep = Representation.from_character(chi)
        assert check_representation(Z5, rep).passed


def test_scaling_representation_fails_unitarity():
    rep = Representation(Z5, {g: np.array([[2.0]]) for g in Z5.elements()})
    report = check_representation(Z5, rep)
    assert not report.passed
    assert report.unitarity_error > 1.0


def test_incomplete_representation_raises():
    els = Z5.elements()
    with pytest.raises(IncompleteRepresentation):
        Representation(Z5, {els[0]: np.eye(1)})


def test_s3_irreps_are_valid_and_complete():
    group, _, irreps = s3_group_and_irreps()
    assert not group.is_abelian
    for rep in irreps:
        assert check_representation(group, rep).passed
    assert irreps_completeness_defect(group, irreps) == 0
    assert irreps_completeness_defect(group, irreps[:2]) == -4
