"""Tests for Young diagram combinatorics."""

import itertools

import pytest

from testideals.diagrams import Diagram, derived_skew, derived_symmetric, iter_diagrams
from testideals.errors import DomainError


D = lambda *parts: Diagram(tuple(parts))

ALL_SMALL = list(iter_diagrams(12))


def test_validation():
    with pytest.raises(DomainError):
        D(1, 2)
    with pytest.raises(DomainError):
        D(2, 0)
    with pytest.raises(DomainError):
        D(-1)
    assert D().parts == ()


@pytest.mark.parametrize("parts, t, expected", [
    ((2, 2, 1, 1), 1, 6),
    ((), 1, 0),
    ((), 5, 0),
    ((3, 1), 2, 2),
    ((3, 1), 4, 0),
    ((5,), 3, 3),
])
def test_gamma(parts, t, expected):
    assert Diagram(parts).gamma(t) == expected


@pytest.mark.parametrize("parts, k, expected", [
    ((2, 2, 1, 1), 2, (6, 2)),
    ((), 3, (0, 0, 0)),
    ((2,), 2, (2, 1)),
])
def test_gamma_vector(parts, k, expected):
    assert Diagram(parts).gamma_vector(k) == expected


@pytest.mark.parametrize("parts, expected", [
    ((3, 1), (2, 1, 1)),
    ((), ()),
    ((2, 2), (2, 2)),
    ((4, 2, 1), (3, 2, 1, 1)),
])
def test_transpose(parts, expected):
    assert Diagram(parts).transpose() == Diagram(expected)


def test_transpose_involution_exhaustive():
    for sigma in ALL_SMALL:
        assert sigma.transpose().transpose() == sigma


def test_gamma_column_identity_exhaustive():
    # gamma(t) equals the total length of columns >= t.
    for sigma in ALL_SMALL:
        cols = sigma.transpose().parts
        for t in range(1, sigma.height + 2):
            assert sigma.gamma(t) == sum(cols[t - 1:])


@pytest.mark.parametrize("a, b, expected", [
    ((2, 1), (3,), (3, 2, 1)),
    ((2, 1), (), (2, 1)),
    ((1,), (1,), (1, 1)),
])
def test_concat(a, b, expected):
    assert Diagram(a).concat(Diagram(b)) == Diagram(expected)


def test_concat_gamma_additive():
    small = list(iter_diagrams(6))
    for a, b in itertools.product(small, small):
        merged = a.concat(b)
        assert merged.size == a.size + b.size
        for t in range(1, max(a.height, b.height) + 2):
            assert merged.gamma(t) == a.gamma(t) + b.gamma(t)


@pytest.mark.parametrize("outer, inner, expected", [
    ((3, 2), (2, 2), True),
    ((3,), (1, 1), False),
    ((3, 2), (3, 2), True),
    ((2, 2), (3,), False),
    ((1,), (), True),
])
def test_contains(outer, inner, expected):
    assert Diagram(outer).contains(Diagram(inner)) is expected


def test_contains_partial_order_and_gamma_monotone():
    small = list(iter_diagrams(7))
    for a, b in itertools.product(small, small):
        if a.contains(b) and b.contains(a):
            assert a == b
        if a.contains(b):
            for t in range(1, a.height + 2):
                assert b.gamma(t) <= a.gamma(t)
    for a, b, c in itertools.product(list(iter_diagrams(4)), repeat=3):
        if a.contains(b) and b.contains(c):
            assert a.contains(c)


@pytest.mark.parametrize("parts, expected", [
    ((2, 2, 2), (3,)),
    ((2, 2), (2,)),
    ((4, 2), (2, 1)),
    ((2,), (1,)),
    ((), ()),
])
def test_derived_symmetric(parts, expected):
    assert derived_symmetric(Diagram(parts)) == Diagram(expected)


def test_derived_symmetric_rejects_odd_parts():
    with pytest.raises(DomainError):
        derived_symmetric(D(3, 1))
    with pytest.raises(DomainError):
        derived_symmetric(D(2, 1))


@pytest.mark.parametrize("parts, expected", [
    ((1, 1, 1, 1), (2,)),
    ((1, 1), (1,)),
    ((2, 2), (1, 1)),
    ((2, 2, 1, 1), (2, 1)),
    ((), ()),
])
def test_derived_skew(parts, expected):
    assert derived_skew(Diagram(parts)) == Diagram(expected)


def test_derived_skew_rejects_odd_columns():
    with pytest.raises(DomainError):
        derived_skew(D(2, 1))
    with pytest.raises(DomainError):
        derived_skew(D(1,))


def test_json_round_trip():
    for sigma in [D(), D(3, 2, 1), D(1, 1)]:
        assert Diagram.from_json(sigma.to_json()) == sigma
    with pytest.raises(DomainError):
        Diagram.from_json({"not": "a diagram"})
