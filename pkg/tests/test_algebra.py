from __future__ import annotations

import pytest

from design_forge.algebra import (
    InvalidElementError,
    NotASubgroupError,
    Ring,
    RingError,
    signed_power_subgroup,
    unit_group_coset_partition,
)


def test_prime_field_rejects_composites():
    with pytest.raises(RingError):
        Ring.prime_field(91)
    with pytest.raises(RingError):
        Ring.prime_field(1)


def test_prime_field_arithmetic():
    f = Ring.prime_field(97)
    assert f.add(90, 10) == 3
    assert f.add(96, 5) == 4
    assert f.mul(50, 2) == 3
    assert f.pow(3, 0) == 1
    assert f.pow(1, 5) == 1
    assert f.neg(0) == 0
    for x in (0, 1, 44, 96):
        assert f.add(x, 0) == x
        assert f.mul(x, 1) == x


def test_z193_81_squared_is_minus_one():
    f = Ring.prime_field(193)
    assert f.mul(81, 81) == 192
    assert f.pow(81, 4) == 1


def test_gf289_arithmetic_known_values():
    f = Ring.gf289()
    assert f.order == 289
    # z + 16 is coded 17*1 + 16
    assert f.add(17, 16) == 33
    # z * z = -3z - 1 = 14z + 16, and z is coded as 17
    assert f.mul(17, 17) == 14 * 17 + 16
    assert f.mul(17, 17) == 254
    assert f.add(254, f.neg(254)) == 0
    # multiplicative identity is the constant 1
    assert f.mul(1, 43) == 43
    for x in (0, 1, 17, 288):
        assert f.add(x, 0) == x


def test_gf289_multiplicative_group_order():
    f = Ring.gf289()
    # 139 has multiplicative order 3 and -1 is not a power of it, so
    # {+/- 139^e} has six elements
    assert f.pow(139, 3) == 1
    h = signed_power_subgroup(f, 139, 3)
    assert len(h) == 6
    assert 1 in h and f.neg(1) in h


def test_element_range_checked():
    f = Ring.prime_field(97)
    with pytest.raises(InvalidElementError):
        f.add(97, 0)
    with pytest.raises(InvalidElementError):
        f.mul(-1, 3)


def test_signed_power_subgroup_z97():
    f = Ring.prime_field(97)
    h = signed_power_subgroup(f, 1, 1)
    assert h == frozenset({1, 96})


def test_signed_power_subgroup_z193():
    f = Ring.prime_field(193)
    h = signed_power_subgroup(f, 81, 2)
    assert h == frozenset({1, 81, 192, 112})


def test_signed_powers_must_form_a_subgroup_of_the_right_size():
    f = Ring.prime_field(97)
    # {+/- 1^e} for e < 2 has only 2 elements, not 4
    with pytest.raises(NotASubgroupError):
        signed_power_subgroup(f, 1, 2)


def test_coset_partition_z97():
    f = Ring.prime_field(97)
    cosets = unit_group_coset_partition(f, 1, 1)
    assert len(cosets) == 48
    assert all(len(c) == 2 for c in cosets)
    flattened = sorted(x for c in cosets for x in c)
    assert flattened == list(range(1, 97))
    # each coset is {x, -x}
    for c in cosets:
        assert (97 - c[0]) % 97 in c


def test_coset_partition_z193():
    f = Ring.prime_field(193)
    cosets = unit_group_coset_partition(f, 81, 2)
    assert len(cosets) == 48
    assert all(len(c) == 4 for c in cosets)
    assert sorted(x for c in cosets for x in c) == list(range(1, 193))


def test_coset_partition_gf289():
    f = Ring.gf289()
    cosets = unit_group_coset_partition(f, 139, 3)
    assert len(cosets) == 48
    assert all(len(c) == 6 for c in cosets)
    nonzero = sorted(x for c in cosets for x in c)
    assert len(nonzero) == 288 and len(set(nonzero)) == 288
