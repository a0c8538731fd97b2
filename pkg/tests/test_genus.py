import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zomo.genus import (BoundQuery, ProfileError, RamificationProfile,
                        abelian_bound_check, enumerate_profiles, is_extremal,
                        rh_genus, zomorrodian_bound)


def test_rh_genus_oracles():
    assert rh_genus(RamificationProfile(81, 0, (9, 27, 27))) == 10
    assert rh_genus(RamificationProfile(729, 0, (81, 243, 243))) == 82
    assert rh_genus(RamificationProfile(243, 0, (27, 81, 81))) == 28
    # unramified covers multiply genus minus one
    assert rh_genus(RamificationProfile(3, 2)) == 4
    # trivial group, no ramification: genus unchanged
    assert rh_genus(RamificationProfile(1, 5)) == 5


def test_rh_genus_rejects_inconsistent():
    with pytest.raises(ProfileError):
        rh_genus(RamificationProfile(3, 0, (1,)))  # genus -1/2... non-integral
    with pytest.raises(ProfileError):
        RamificationProfile(9, 0, (2,))  # 2 does not divide 9


def test_bound_oracles():
    res = zomorrodian_bound(BoundQuery(3, 10))
    assert res.bound == 81 and res.largest_power == 81
    res = zomorrodian_bound(BoundQuery(3, 28))
    assert res.bound == 243
    res = zomorrodian_bound(BoundQuery(3, 82))
    assert res.bound == 729
    # d = 5: 2d/(d-3) (g-1) = 5(g-1)
    assert zomorrodian_bound(BoundQuery(5, 11)).bound == 50
    # elliptic-quotient variant 2d/(d-1)
    assert zomorrodian_bound(BoundQuery(3, 10, elliptic_quotient=True)).bound \
        == 27


def test_bound_rejects_bad_input():
    with pytest.raises(ProfileError):
        BoundQuery(2, 10)
    with pytest.raises(ProfileError):
        BoundQuery(4, 10)
    with pytest.raises(ProfileError):
        BoundQuery(3, 1)


def test_profile_uniqueness_extremal():
    for h in (2, 3, 4):
        order = 3 ** (h + 2)
        genus = 3 ** h + 1
        profs = [p for p in enumerate_profiles(3, order, genus)
                 if p.quotient_genus == 0]
        assert len(profs) == 1
        assert profs[0].orbit_sizes == (order // 9, order // 3, order // 3)


def test_enumerate_profiles_all_reproduce_genus():
    for p in enumerate_profiles(3, 81, 10):
        assert rh_genus(p) == 10


def test_is_extremal():
    assert is_extremal(10, 81) == (True, 2)
    assert is_extremal(28, 243) == (True, 3)
    assert is_extremal(82, 729) == (True, 4)
    assert is_extremal(10, 243) == (False, None)
    assert is_extremal(11, 81) == (False, None)


def test_abelian_bound():
    assert not abelian_bound_check(10, 81)   # 81 > 44
    assert abelian_bound_check(10, 44)


@given(st.integers(1, 5))
@settings(max_examples=40, deadline=None)
def test_profiles_sorted_and_consistent(hpow):
    order = 3 ** hpow
    for genus in range(2, 30):
        profs = enumerate_profiles(3, order, genus)
        seen = set()
        for p in profs:
            key = (p.quotient_genus, p.orbit_sizes)
            assert key not in seen  # no duplicates
            seen.add(key)
            assert rh_genus(p) == genus
            assert all(order % l == 0 and l < order for l in p.orbit_sizes)
