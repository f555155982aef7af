"""Triangle sets: enumeration, membership, images, metric and geodesic scans."""

import pytest

import oracles
from mhg_twist import (
    DimensionMismatchError,
    InvalidInputError,
    OutOfAlphabetError,
    TriangleSet,
    all_triples,
    contains_geodesics,
    fiber_distances,
    gamma_diameter,
    identity,
    image_set,
    invert,
    is_metric,
    rho,
    rho_inverse,
    tau,
)


@pytest.mark.parametrize("delta", range(1, 13))
def test_all_triples_matches_oracle(delta):
    assert list(all_triples(delta)) == oracles.all_triples(delta)


def test_all_triples_count_is_binomial():
    # multisets of size 3 from delta symbols
    for delta in range(1, 13):
        n = delta * (delta + 1) * (delta + 2) // 6
        assert len(all_triples(delta)) == n


def test_from_triples_dedups_and_requires_sorted():
    ts = TriangleSet.from_triples(3, [(1, 2, 3), (1, 2, 3), (1, 1, 1)])
    assert ts.members() == [(1, 1, 1), (1, 2, 3)]
    assert (1, 2, 3) in ts
    assert (1, 1, 2) not in ts
    # the catalog works in sorted triples only, no silent normalization
    with pytest.raises(InvalidInputError):
        TriangleSet.from_triples(3, [(3, 2, 1)])
    with pytest.raises(InvalidInputError):
        (3, 2, 1) in ts


def test_from_triples_rejects_out_of_range():
    with pytest.raises(OutOfAlphabetError):
        TriangleSet.from_triples(3, [(1, 2, 4)])
    with pytest.raises(OutOfAlphabetError):
        TriangleSet.from_triples(3, [(0, 1, 1)])


def test_bool_array_roundtrip():
    full = TriangleSet.from_triples(4, all_triples(4))
    again = TriangleSet.from_bool_array(4, full.to_bool_array())
    assert again.members() == full.members()


def test_json_roundtrip():
    ts = TriangleSet.from_triples(5, [(1, 2, 3), (5, 5, 5)])
    assert TriangleSet.from_json(ts.to_json()).members() == ts.members()


@pytest.mark.parametrize("delta", range(3, 9))
def test_image_set_matches_oracle(delta):
    subset = [t for t in all_triples(delta) if sum(t) % 3 != 1]
    ts = TriangleSet.from_triples(delta, subset)
    for twist in (rho(delta), rho_inverse(delta), tau(delta, 0), tau(delta, 1)):
        got = set(image_set(ts, twist).members())
        assert got == oracles.image(subset, twist.images)


@pytest.mark.parametrize("delta", range(3, 9))
def test_image_membership_goes_through_the_inverse(delta):
    # x lies in the image set exactly when its preimage was a member
    subset = [t for t in all_triples(delta) if min(t) == 1]
    ts = TriangleSet.from_triples(delta, subset)
    twist = rho(delta)
    img = image_set(ts, twist)
    inv = invert(twist)
    for x in all_triples(delta):
        assert (x in img) == (inv.apply_to_triple(x) in ts)


def test_image_under_identity_is_identity():
    ts = TriangleSet.from_triples(6, [(1, 2, 3), (4, 5, 6)])
    assert image_set(ts, identity(6)).members() == ts.members()


def test_image_set_delta_mismatch():
    ts = TriangleSet.from_triples(3, [(1, 2, 3)])
    with pytest.raises(DimensionMismatchError):
        image_set(ts, rho(4))


def test_is_metric_flags_the_bad_triple():
    good = TriangleSet.from_triples(3, [(1, 1, 2), (2, 2, 3)])
    assert is_metric(good) == (True, None)
    bad = TriangleSet.from_triples(4, [(1, 1, 2), (1, 1, 4)])
    flag, witness = is_metric(bad)
    assert not flag
    assert witness == (1, 1, 4)
    assert not oracles.is_metric_triple(witness)


@pytest.mark.parametrize("delta", range(2, 9))
def test_is_metric_matches_oracle_on_slices(delta):
    for keep in range(3):
        subset = [t for t in all_triples(delta) if sum(t) % 3 == keep]
        if not subset:
            continue
        ts = TriangleSet.from_triples(delta, subset)
        assert is_metric(ts)[0] == all(oracles.is_metric_triple(t) for t in subset)


def test_contains_geodesics_reports_first_gap():
    delta = 5
    full = [(1, k, k + 1) for k in range(1, delta)]
    ts = TriangleSet.from_triples(delta, full)
    assert contains_geodesics(ts) == (True, None)
    holed = TriangleSet.from_triples(delta, [t for t in full if t != (1, 3, 4)])
    assert contains_geodesics(holed) == (False, 3)
    assert not oracles.has_all_geodesics(holed.members(), delta)


@pytest.mark.parametrize("delta", range(3, 9))
def test_gamma_diameter_matches_oracle(delta):
    subset = [t for t in all_triples(delta) if sum(t) <= 2 * delta + 1]
    ts = TriangleSet.from_triples(delta, subset)
    for i in range(1, delta + 1):
        assert gamma_diameter(ts, i) == oracles.gamma_diameter(subset, i)


def test_fiber_distances_lists_the_ks():
    ts = TriangleSet.from_triples(4, [(1, 2, 2), (2, 2, 3), (1, 2, 3)])
    assert fiber_distances(ts, 2) == [1, 3]
    assert fiber_distances(ts, 1) == []
    assert gamma_diameter(ts, 2) == 3
    assert gamma_diameter(ts, 1) == 0
