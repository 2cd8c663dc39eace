import pytest
from hypothesis import given, strategies as st

from lmestates.arith import (
    INT128_MAX,
    DimVec,
    delta,
    gk,
    gmax,
    invariants,
    lcm_all,
    r_invariant,
    strip_ones,
    validate_dims,
)
from lmestates.errors import (
    DimOverflow,
    InsufficientNontrivial,
    NonPositiveEntry,
    TooFewSubsystems,
)
from oracles import delta_direct, r_bitmask

dims_lists = st.lists(st.integers(1, 12), min_size=2, max_size=6).filter(
    lambda xs: sum(x >= 2 for x in xs) >= 2
)


def test_validate_sorts():
    assert validate_dims([3, 2, 2]) == DimVec((2, 2, 3))
    assert validate_dims([2, 2, 2]).dims == (2, 2, 2)


@pytest.mark.parametrize(
    "raw, exc",
    [
        ([1, 5], InsufficientNontrivial),
        ([1, 1, 1, 7], InsufficientNontrivial),
        ([4], TooFewSubsystems),
        ([2, 0, 3], NonPositiveEntry),
        ([2, -2, 3], NonPositiveEntry),
        ([2**64, 2**64], DimOverflow),
    ],
)
def test_validate_rejects(raw, exc):
    with pytest.raises(exc):
        validate_dims(raw)


@pytest.mark.parametrize("dims, expected", [((2, 2, 2), -2), ((3, 3, 3), 2), ((4, 4), -15)])
def test_delta(dims, expected):
    assert delta_direct(dims) == expected
    assert delta(validate_dims(dims)) == expected


@pytest.mark.parametrize(
    "dims, k, expected",
    [((2, 2, 2), 2, 12), ((2, 3, 6), 2, 14), ((2, 3, 6), 3, 1)],
)
def test_gk(dims, k, expected):
    assert gk(validate_dims(dims), k) == expected


def test_gk_range():
    with pytest.raises(ValueError):
        gk(validate_dims([2, 2]), 3)
    with pytest.raises(ValueError):
        gk(validate_dims([2, 2]), 0)


@pytest.mark.parametrize("dims, expected", [((2, 2, 2), 4), ((2, 3, 6), 0), ((2, 2, 5), -8)])
def test_r(dims, expected):
    assert r_bitmask(dims) == expected
    assert r_invariant(validate_dims(dims)) == expected


@pytest.mark.parametrize("dims, expected", [((2, 4, 6), 2), ((2, 5, 5), 5), ((2, 3), 1)])
def test_gmax(dims, expected):
    assert gmax(validate_dims(dims)) == expected


def test_strip_ones():
    assert strip_ones(validate_dims([1, 1, 2, 3])).dims == (2, 3)
    assert strip_ones(validate_dims([2, 2, 3])).dims == (2, 2, 3)
    # validation refuses (1,1,1,2), so build the vector directly
    with pytest.raises(InsufficientNontrivial):
        strip_ones(DimVec((1, 1, 1, 2)))


def test_overflow_is_reported():
    big = 2**43
    d = validate_dims([big, big])  # product 2^86 fits
    assert delta(d) == big * big - 1 - 2 * (big * big - 1)
    d = DimVec((2**64, 2**64))  # product 2^128 does not
    with pytest.raises(DimOverflow):
        delta(d)
    assert INT128_MAX == 2**127 - 1


@given(dims_lists)
def test_r_matches_bitmask_oracle(xs):
    assert r_invariant(validate_dims(xs)) == r_bitmask(xs)


@given(dims_lists)
def test_r_delta_identity(xs):
    d = validate_dims(xs)
    alt = delta(d) - d.n + 1 + sum((-1) ** k * gk(d, k) for k in range(2, d.n + 1))
    assert r_invariant(d) == alt


@given(dims_lists, st.randoms())
def test_permutation_invariance(xs, rnd):
    ys = list(xs)
    rnd.shuffle(ys)
    a, b = validate_dims(xs), validate_dims(ys)
    assert a == b
    assert invariants(a) == invariants(b)


@given(dims_lists)
def test_strip_ones_preserves_invariants(xs):
    d = validate_dims(xs)
    s = strip_ones(d)
    assert (delta(s), r_invariant(s), gmax(s)) == (delta(d), r_invariant(d), gmax(d))


@given(dims_lists)
def test_gk_extremes(xs):
    d = validate_dims(xs)
    assert gk(d, 1) == sum(x * x for x in xs)
    g = 0
    from math import gcd

    for x in xs:
        g = gcd(g, x)
    assert gk(d, d.n) == g * g
    assert invariants(d).gmax >= 1
    assert lcm_all(d) % max(xs) == 0


def test_two_party_r_sign_scan():
    for a in range(2, 65):
        for b in range(a, 65):
            r = r_invariant(validate_dims([a, b]))
            assert (r == 0) if a == b else (r < 0), (a, b)
