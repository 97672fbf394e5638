"""Tests for Newton-polytope monomial test ideals."""

import itertools
from fractions import Fraction

import pytest

from testideals.errors import DomainError
from testideals.monomial import (
    MonomialIdeal,
    NewtonPolyhedron,
    floor_membership,
    fpt_monomial,
    newton,
    product,
)
from testideals.monomial import test_ideal_monomial as tau_monomial

F = Fraction


def mono(nvars, *gens):
    return MonomialIdeal(nvars, tuple(tuple(g) for g in gens))


XY23 = mono(2, (2, 0), (0, 3))        # (x^2, y^3)
M2 = mono(2, (1, 0), (0, 1))          # (x, y)
M3 = mono(3, (1, 0, 0), (0, 1, 0), (0, 0, 1))
MIXED = mono(2, (2, 1), (1, 3))       # (x^2 y, x y^3)
CUBES = mono(3, (3, 0, 0), (0, 3, 0), (0, 0, 3))


def test_minimalization_and_validation():
    ideal = mono(2, (2, 0), (2, 1), (0, 3), (5, 5))
    assert ideal.gens == ((0, 3), (2, 0))
    assert MonomialIdeal.unit(2).is_unit
    assert mono(2, (0, 0), (1, 2)).is_unit
    with pytest.raises(DomainError):
        mono(2)
    with pytest.raises(DomainError):
        mono(2, (1,))
    with pytest.raises(DomainError):
        mono(2, (-1, 0))


def test_contains_exponent():
    assert XY23.contains_exponent((2, 5))
    assert not XY23.contains_exponent((1, 2))
    with pytest.raises(DomainError):
        XY23.contains_exponent((1,))


def test_newton_halfspaces_xy23():
    np_ = newton(XY23)
    assert set(np_.halfspaces) == {
        ((3, 2), F(6)),
        ((1, 0), F(0)),
        ((0, 1), F(0)),
    }
    assert np_.contains((2, 2))
    assert np_.contains((F(6, 5), F(6, 5)))
    assert not np_.contains((1, 1))


def test_newton_single_variable_generator():
    np_ = newton(mono(2, (1, 0)))
    assert set(np_.halfspaces) == {((1, 0), F(1)), ((0, 1), F(0))}


def test_newton_unit_ideal_is_full_orthant():
    np_ = newton(MonomialIdeal.unit(2))
    assert set(np_.halfspaces) == {((1, 0), F(0)), ((0, 1), F(0))}


def test_newton_upward_closed_vs_hull():
    # (2,2) is in the Newton polyhedron but not in the bounded hull.
    np_ = newton(XY23)
    assert np_.contains((2, 2))
    assert not np_.base.satisfies_facets((2, 2))


def test_newton_normals_nonnegative():
    for ideal in [XY23, M2, M3, MIXED, CUBES, mono(3, (1, 2, 0), (0, 1, 3), (2, 0, 1))]:
        for normal, _ in newton(ideal).halfspaces:
            assert all(c >= 0 for c in normal)


@pytest.mark.parametrize("ideal, lam, expected", [
    (XY23, F(1), ((0, 1), (1, 0))),                      # tau(1 . (x^2,y^3)) = (x,y)
    (XY23, F(5, 6), ((0, 1), (1, 0))),                   # right-continuous at fpt
    (XY23, F(1, 2), ((0, 0),)),                           # unit below fpt
    (M2, F(2), ((0, 1), (1, 0))),                         # m^(2+1-2) = m
    (M3, F(3), ((0, 0, 1), (0, 1, 0), (1, 0, 0))),
])
def test_tau_monomial(ideal, lam, expected):
    assert tau_monomial(ideal, lam).gens == expected


def test_tau_monomial_maximal_ideal_powers():
    # tau(lam . m) = m^(floor(lam)+1-N), with the unit ideal when <= 0.
    for nvars in (2, 3):
        gens = [tuple(int(i == j) for i in range(nvars)) for j in range(nvars)]
        m = MonomialIdeal(nvars, tuple(gens))
        for lam in [F(1), F(nvars) - F(1, 3), F(nvars), F(nvars) + F(5, 4),
                    F(nvars) + 2]:
            got = tau_monomial(m, lam)
            s = max(0, int(lam) + 1 - nvars)
            expected = sorted(
                e for e in itertools.product(range(s + 1), repeat=nvars)
                if sum(e) == s
            )
            assert got.gens == tuple(expected)


def test_tau_floor_form_vs_lattice_forms():
    # The closed-boundary variant (x^b : b+1 in lam*NP) admits b = 0 at the
    # threshold itself, i.e. degenerates to the unit ideal there; the floor
    # form stays proper, as a right-continuous threshold requires.  The
    # strict-interior variant agrees with the floor form everywhere.
    lam = fpt_monomial(XY23)
    np_ = newton(XY23)
    assert np_.contains(tuple(F(1) / lam for _ in range(2)))
    assert tau_monomial(XY23, lam).gens == ((0, 1), (1, 0))

    def interior_admits(point):
        return all(
            sum(n[i] * point[i] for i in range(2)) > c for n, c in np_.halfspaces
        )

    for probe in [F(5, 6), F(1), F(7, 6), F(4, 3), F(2)]:
        floor_gens = tau_monomial(XY23, probe).gens
        for b in itertools.product(range(8), repeat=2):
            shifted = tuple(F(x + 1) / probe for x in b)
            member = any(all(x >= g for x, g in zip(b, gen)) for gen in floor_gens)
            assert interior_admits(shifted) == member


def test_floor_membership_agrees_with_generators():
    ideals = [XY23, M2, MIXED, mono(2, (4, 0), (2, 1), (0, 2))]
    lams = [F(1, 3), F(5, 6), F(1), F(3, 2), F(7, 3)]
    for ideal, lam in itertools.product(ideals, lams):
        tau = tau_monomial(ideal, lam)
        for b in itertools.product(range(6), repeat=2):
            assert floor_membership(ideal, lam, b) == tau.contains_exponent(b)


@pytest.mark.parametrize("ideal, expected", [
    (XY23, F(5, 6)),
    (M2, F(2)),
    (M3, F(3)),
    (mono(1, (2,)), F(1, 2)),
    (mono(2, (3, 0), (0, 3)), F(2, 3)),
    (MIXED, F(3, 5)),
])
def test_fpt_monomial(ideal, expected):
    assert fpt_monomial(ideal) == expected


def test_fpt_monomial_vs_newton_halfspaces():
    # Independent route: the smallest s with s*(1,...,1) in the Newton
    # polyhedron is the max of offset / (normal . ones) over the halfspaces.
    for ideal in [XY23, M2, M3, MIXED, CUBES]:
        np_ = newton(ideal)
        s_min = max(
            c / sum(n) for n, c in np_.halfspaces if c > 0
        )
        assert fpt_monomial(ideal) == 1 / s_min
        assert np_.contains([s_min] * ideal.nvars)


def test_fpt_threshold_behaviour():
    for ideal in [XY23, M2, MIXED]:
        t = fpt_monomial(ideal)
        assert tau_monomial(ideal, t - F(1, 50)).is_unit
        assert not tau_monomial(ideal, t).is_unit


def test_fpt_rejects_unit():
    with pytest.raises(DomainError):
        fpt_monomial(MonomialIdeal.unit(3))


@pytest.mark.parametrize("a, b, expected", [
    (mono(2, (1, 0)), mono(2, (0, 1)), ((1, 1),)),
    (XY23, MonomialIdeal.unit(2), ((0, 3), (2, 0))),
    (M2, M2, ((0, 2), (1, 1), (2, 0))),
])
def test_product(a, b, expected):
    assert product(a, b).gens == expected


def test_skoda_identity():
    # For lam >= number of generators, tau(lam) = I . tau(lam - 1).
    for ideal in [XY23, M2, MIXED]:
        ngens = len(ideal.gens)
        for offset in [F(0), F(1, 4), F(1, 2), F(1)]:
            lam = F(ngens) + offset
            lhs = tau_monomial(ideal, lam)
            rhs = product(ideal, tau_monomial(ideal, lam - 1))
            assert lhs == rhs


def test_monotone_and_right_continuous():
    ideal = XY23
    lams = [F(1, 2), F(5, 6), F(1), F(4, 3), F(3, 2), F(2), F(3)]
    taus = [tau_monomial(ideal, lam) for lam in lams]
    for bigger, smaller in zip(taus, taus[1:]):
        assert bigger.contains_ideal(smaller)
    for lam in [F(5, 6), F(1), F(3, 2)]:
        assert tau_monomial(ideal, lam) == tau_monomial(ideal, lam + F(1, 120))


def test_fpt_bounds_for_equigenerated_ideals():
    # height / degree <= fpt <= height, with height the size of the smallest
    # variable-support cover, for ideals generated in one degree.
    fixtures = [XY23.nvars and mono(2, (2, 0), (0, 2)), CUBES, M2, M3,
                mono(2, (2, 1), (1, 2))]
    for ideal in fixtures:
        degrees = {sum(g) for g in ideal.gens}
        assert len(degrees) == 1
        degree = degrees.pop()
        nvars = ideal.nvars
        best_cover = nvars
        for size in range(1, nvars + 1):
            for support in itertools.combinations(range(nvars), size):
                if all(any(g[i] > 0 for i in support) for g in ideal.gens):
                    best_cover = min(best_cover, size)
                    break
        t = fpt_monomial(ideal)
        assert F(best_cover, degree) <= t <= best_cover


def test_json_round_trip():
    for ideal in [XY23, M3, MonomialIdeal.unit(2)]:
        assert MonomialIdeal.from_json(ideal.to_json()) == ideal
    with pytest.raises(DomainError):
        MonomialIdeal.from_json({"nvars": 2})
