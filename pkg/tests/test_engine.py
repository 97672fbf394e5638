"""Tests for the central test-ideal engine."""

import itertools
import random
from fractions import Fraction

import pytest

from testideals.contexts import RingContext, heights, witness_shape
from testideals.diagrams import Diagram, iter_diagrams
from testideals.engine import (
    BoundsReport,
    IdealPresentation,
    ProductIdealSpec,
    e_vector,
    floating_check,
    fpt,
    fpt_bounds_check,
    gamma_polytope,
    ideal_contains,
    ideal_equal,
    integral_closure,
    jumping_numbers,
    jumping_numbers_sum,
    membership,
    minimal_generating_shapes,
)
from testideals.engine import test_ideal as tau
from testideals.engine import test_ideal_closed_form as tau_closed
from testideals.errors import ConsistencyError, DomainError

F = Fraction
G22 = RingContext.generic(2, 2)
G23 = RingContext.generic(2, 3)


def spec(context, *shapes):
    return ProductIdealSpec(context, tuple(Diagram(tuple(s)) for s in shapes))


def pres(context, *vectors):
    return IdealPresentation.reduced(context, [tuple(v) for v in vectors])


# ---------------------------------------------------------------------------
# specs and presentations

def test_spec_validation():
    with pytest.raises(DomainError):
        spec(G22)
    with pytest.raises(DomainError):
        spec(G22, (3,))
    s = spec(G22, (2,), (2,), (1, 1))
    assert s.sigmas == (Diagram((1, 1)), Diagram((2,)))


def test_presentation_validation_and_reduction():
    with pytest.raises(DomainError):
        IdealPresentation(G22, ((1, 0), (1, 1)))
    with pytest.raises(DomainError):
        IdealPresentation(G22, ((1, -1),))
    with pytest.raises(DomainError):
        IdealPresentation(G22, ((1, 0, 0),))
    p = pres(G22, (1, 0), (1, 1), (1, 2))
    assert p.antichain == ((1, 0),)
    assert IdealPresentation.unit(G22).is_unit
    assert not p.is_unit


def test_presentation_json_round_trip():
    p = pres(G23, (2, 0), (1, 1))
    assert IdealPresentation.from_json(p.to_json()) == p


# ---------------------------------------------------------------------------
# polytopes and closures

def test_gamma_polytope_examples():
    poly = gamma_polytope(spec(G22, (1, 1), (2,)))
    assert poly.vertices == ((F(2), F(0)), (F(2), F(1)))
    poly = gamma_polytope(spec(G23, (1,)))
    assert poly.vertices == ((F(1), F(0)),)
    poly = gamma_polytope(spec(G22, (2,)))
    assert poly.vertices == ((F(2), F(1)),)


@pytest.mark.parametrize("shapes, s, expected", [
    ([(2,)], 3, [(6, 3)]),
    ([(2,)], 1, [(2, 1)]),
    ([(1, 1)], 1, [(2, 0)]),
    ([(1, 1), (2,)], 1, [(2, 0)]),
])
def test_integral_closure(shapes, s, expected):
    assert integral_closure(spec(G22, *shapes), s).antichain == tuple(expected)


def test_integral_closure_single_shape_scales_gamma():
    # For one shape the closure of the s-th power is the intersection with
    # exponents s * gamma_i.
    for parts in [(2,), (1, 1), (2, 1)]:
        for s in (1, 2, 3):
            got = integral_closure(spec(G22, parts), s)
            gv = Diagram(parts).gamma_vector(2)
            assert got.antichain == ((s * gv[0], s * gv[1]),)


def test_integral_closure_ceil_witnesses():
    from testideals import geometry

    sp = spec(G22, (1, 1), (2,))
    poly = gamma_polytope(sp)
    for s in (1, 2):
        for vec in geometry.ceil_vectors(poly, s):
            q = geometry.BoxQuery.build(
                2,
                lowers={i: (F(vec[i] - 1, s), True) for i in range(2)},
                uppers={i: (F(vec[i], s), False) for i in range(2)},
            )
            w = geometry.feasible(poly, q)
            assert w is not None
            assert tuple((s * c).__ceil__() for c in w) == vec


# ---------------------------------------------------------------------------
# test ideals

def test_test_ideal_sum_example():
    got = tau(spec(G22, (1, 1), (2,)), 2)
    assert got.antichain == ((1, 0),)


def test_test_ideal_unit_below_threshold():
    for m, n in [(2, 2), (2, 3)]:
        c = RingContext.generic(m, n)
        sp = spec(c, (1,))
        assert fpt(sp) == m * n
        assert tau(sp, F(m * n) - F(1, 2)).is_unit
        assert not tau(sp, m * n).is_unit


def test_maximal_ideal_closed_form():
    # tau(lam . (all variables)) has single exponent floor(lam) + 1 - (m*n).
    c = RingContext.generic(2, 2)
    for lam in [F(4), F(9, 2), F(5), F(25, 4)]:
        got = tau(spec(c, (1,)), lam)
        s = int(lam) + 1 - 4
        expected = (max(0, s), 0)
        assert got.antichain == (expected,)


@pytest.mark.parametrize("context, sigma, lam, expected", [
    (G22, (2,), F(1), (0, 1)),
    (RingContext.symmetric(2), (2,), F(1, 2), (0, 0)),
])
def test_test_ideal_closed_form_examples(context, sigma, lam, expected):
    got = tau_closed(context, Diagram(sigma), lam)
    assert got.antichain == (expected,)


def test_closed_form_at_witness_shape():
    for context in [G22, G23, RingContext.symmetric(3), RingContext.skew_symmetric(5)]:
        tau = witness_shape(context)
        got = tau_closed(context, tau, 1)
        assert got.antichain == ((1,) * context.k,)


def test_singleton_consistency_on_grid():
    contexts = [G22, G23, RingContext.symmetric(3), RingContext.skew_symmetric(5)]
    lams = [F(1, 2), F(1), F(4, 3), F(3, 2), F(2), F(7, 3)]
    for context in contexts:
        k = context.k
        shapes = [d for d in iter_diagrams(4, max_height=k) if d.parts]
        for sigma, lam in itertools.product(shapes, lams):
            sp = ProductIdealSpec(context, (sigma,))
            assert ideal_equal(
                tau(sp, lam), tau_closed(context, sigma, lam)
            )


# ---------------------------------------------------------------------------
# membership

@pytest.mark.parametrize("shapes, lam, alpha, expected", [
    ([(1, 1), (2,)], F(2), (1,), True),
    ([(2,)], F(2), (1,), False),
    ([(2,)], F(2), (2,), False),
    ([(2,)], F(2), (2, 2), True),
])
def test_membership_examples(shapes, lam, alpha, expected):
    assert membership(spec(G22, *shapes), lam, Diagram(alpha)) is expected


def test_membership_empty_shape_iff_unit():
    sp = spec(G22, (1, 1), (2,))
    assert membership(sp, F(3, 2), Diagram(())) is True  # below fpt = 2
    assert membership(sp, F(2), Diagram(())) is False


def test_membership_agrees_with_floor_enumeration():
    rng = random.Random(20240 + 7)
    contexts = [G22, G23, RingContext.symmetric(3), RingContext.skew_symmetric(6)]
    for _ in range(25):
        context = rng.choice(contexts)
        k = context.k
        pool = [d for d in iter_diagrams(4, max_height=k) if d.parts]
        sigmas = tuple(rng.sample(pool, rng.randint(1, 2)))
        sp = ProductIdealSpec(context, sigmas)
        lam = F(rng.randint(1, 8), rng.randint(1, 4))
        ideal = tau(sp, lam)
        for alpha in iter_diagrams(4, max_height=k):
            assert membership(sp, lam, alpha) == ideal.admits_shape(alpha)


# ---------------------------------------------------------------------------
# generating shapes and ideal comparison

@pytest.mark.parametrize("vectors, expected", [
    ([(1, 0)], [(1,)]),
    ([(2, 1)], [(2,)]),
    ([(0, 0)], [()]),
    ([(2, 0)], [(1, 1), (2,)]),
    ([(1, 2)], [(2, 2)]),
])
def test_minimal_generating_shapes(vectors, expected):
    got = minimal_generating_shapes(pres(G22, *vectors))
    assert got == tuple(Diagram(tuple(e)) for e in expected)


def test_minimal_generating_shapes_brute_force():
    # Brute-force oracle: minimal admitted diagrams among all small diagrams.
    cases = [
        pres(G22, (1, 0)),
        pres(G22, (2, 1)),
        pres(G22, (3, 1)),
        pres(G23, (2, 2)),
        pres(RingContext.symmetric(3), (2, 1, 1)),
        pres(G23, (4, 1), (2, 2)),
    ]
    for p in cases:
        k = p.context.k
        admitted = [
            d for d in iter_diagrams(10, max_height=k) if p.admits_shape(d)
        ]
        brute = [
            d for d in admitted
            if not any(d.contains(o) and o != d for o in admitted)
        ]
        assert set(minimal_generating_shapes(p)) == set(brute)


def test_ideal_equal_examples():
    assert ideal_equal(pres(G22, (1, 0)), pres(G22, (1, 0), (1, 1)))
    assert not ideal_equal(pres(G22, (2, 0)), pres(G22, (2, 1)))
    assert ideal_equal(IdealPresentation.unit(G22), IdealPresentation.unit(G22))
    # Same ideal despite different antichains: gamma_1 >= 1 is implied by
    # gamma_2 >= 2 on every diagram.
    assert ideal_equal(pres(G22, (1, 2)), pres(G22, (0, 2)))


def test_ideal_contains_is_shape_level():
    big = pres(G22, (1, 0))
    small = pres(G22, (2, 1))
    assert ideal_contains(small, big)
    assert not ideal_contains(big, small)
    with pytest.raises(DomainError):
        ideal_equal(pres(G22, (1, 0)), pres(G23, (1, 0)))


# ---------------------------------------------------------------------------
# thresholds

@pytest.mark.parametrize("context, shapes, expected", [
    (G22, [(2,)], F(1)),
    (G22, [(1, 1), (2,)], F(2)),
    (G22, [(1,)], F(4)),
    (RingContext.symmetric(3), [(2, 1)], F(2)),
])
def test_fpt_examples(context, shapes, expected):
    assert fpt(spec(context, *shapes)) == expected


def test_fpt_closed_form_single_row_shape():
    for m, n in [(2, 2), (2, 3), (3, 4), (4, 6)]:
        c = RingContext.generic(m, n)
        for t in range(1, m + 1):
            expected = min(
                F((m - i + 1) * (n - i + 1), t - i + 1) for i in range(1, t + 1)
            )
            assert fpt(spec(c, (t,))) == expected


def test_fpt_matches_sweep():
    sp = spec(G22, (1, 1), (2,))
    threshold = fpt(sp)
    probes = [threshold - F(1, 7), threshold - F(1, 50)]
    assert all(tau(sp, p).is_unit for p in probes)
    assert not tau(sp, threshold).is_unit


def test_fpt_rejects_unit_spec():
    with pytest.raises(DomainError):
        fpt(spec(G22, ()))


# ---------------------------------------------------------------------------
# jumping numbers

def test_jumping_numbers_maximal_ideal():
    for m, n in [(2, 2), (2, 3)]:
        c = RingContext.generic(m, n)
        d = m * n
        got = jumping_numbers(c, Diagram((1,)), d + 3)
        assert got == [F(d), F(d + 1), F(d + 2), F(d + 3)]


def test_jumping_numbers_two_by_two_determinant():
    # Candidates (4+j)/2 and (1+j)/1; only 1 and 2 are verified changes
    # ((0,1) persists across 3/2).
    got = jumping_numbers(G22, Diagram((2,)), 2)
    assert got == [F(1), F(2)]
    assert ideal_equal(
        tau_closed(G22, Diagram((2,)), F(3, 2)),
        tau_closed(G22, Diagram((2,)), 1),
    )


def test_jumping_numbers_below_threshold_empty():
    assert jumping_numbers(G22, Diagram((2,)), F(1, 2)) == []


def test_jumping_numbers_sum_singleton_agrees():
    for context, sigma in [(G22, (2,)), (G23, (2, 1)), (RingContext.symmetric(3), (2, 2))]:
        report = jumping_numbers_sum(spec(context, sigma), 3)
        assert list(report.jumps) == jumping_numbers(context, Diagram(sigma), 3)
        assert report.metadata["complete"] is True


def test_jumping_numbers_sum_first_jump_is_fpt():
    fixtures = [
        spec(G22, (1, 1), (2,)),
        spec(G23, (2,), (1, 1, 1)),
        spec(RingContext.symmetric(3), (2, 1), (3,)),
        spec(RingContext.skew_symmetric(5), (1, 1), (2,)),
    ]
    for sp in fixtures:
        threshold = fpt(sp)
        report = jumping_numbers_sum(sp, threshold + 1)
        assert report.jumps and report.jumps[0] == threshold
        assert report.metadata["complete"] == "unverified"


def test_jumping_numbers_sum_constant_between_jumps():
    sp = spec(G22, (1, 1), (2,))
    report = jumping_numbers_sum(sp, 4)
    jumps = list(report.jumps)
    for a, b in zip(jumps, jumps[1:]):
        mid = (a + b) / 2
        assert ideal_equal(tau(sp, mid), tau(sp, a))
        assert not ideal_equal(tau(sp, b), tau(sp, a))


def test_jumping_numbers_sum_unit_spec_empty():
    report = jumping_numbers_sum(spec(G22, ()), 5)
    assert report.jumps == ()


# ---------------------------------------------------------------------------
# e-vector, floating property, threshold bounds

@pytest.mark.parametrize("shapes, expected", [
    ([(2,)], (2, 1)),
    ([(1, 1), (2,)], (2, 0)),
    ([()], (0, 0)),
])
def test_e_vector(shapes, expected):
    assert e_vector(spec(G22, *shapes)) == expected


def test_floating_check_examples():
    report = floating_check(spec(G22, (1, 1), (2,)), 2)
    assert report.contained and report.equal
    report = floating_check(spec(G22, (1, 1), (2,)), F(3, 2))
    assert report.contained and report.equal  # both unit below the threshold


def test_floating_single_shape_always_equal():
    rng = random.Random(91)
    contexts = [G22, G23, RingContext.symmetric(3), RingContext.skew_symmetric(5)]
    for _ in range(20):
        context = rng.choice(contexts)
        pool = [d for d in iter_diagrams(5, max_height=context.k) if d.parts]
        sigma = rng.choice(pool)
        lam = F(rng.randint(1, 12), rng.randint(1, 4))
        report = floating_check(ProductIdealSpec(context, (sigma,)), lam)
        assert report.contained and report.equal


def test_floating_multi_shape_contained():
    rng = random.Random(92)
    contexts = [G22, G23, RingContext.symmetric(3)]
    for _ in range(12):
        context = rng.choice(contexts)
        pool = [d for d in iter_diagrams(4, max_height=context.k) if d.parts]
        sigmas = tuple(rng.sample(pool, 2))
        lam = F(rng.randint(1, 9), rng.randint(1, 3))
        report = floating_check(ProductIdealSpec(context, sigmas), lam)
        assert report.contained


def test_fpt_bounds_check():
    report = fpt_bounds_check(G22, Diagram((2,)))
    assert report == BoundsReport(lower=F(1, 2), value=F(1), upper=F(1))
    report = fpt_bounds_check(RingContext.symmetric(3), Diagram((2, 1)))
    assert report.lower == F(1) and report.value == F(2) and report.upper == F(3)
    report = fpt_bounds_check(G23, Diagram((1,)))
    assert report.lower == report.value == report.upper == F(6)
    with pytest.raises(DomainError):
        fpt_bounds_check(G22, Diagram(()))


# ---------------------------------------------------------------------------
# cross-cutting invariants

def test_monotone_in_lambda():
    sp = spec(G22, (1, 1), (2,))
    lams = [F(1), F(3, 2), F(2), F(5, 2), F(3), F(7, 2)]
    ideals = [tau(sp, lam) for lam in lams]
    for bigger, smaller in zip(ideals, ideals[1:]):
        assert ideal_contains(smaller, bigger)


def test_right_continuity_at_candidates():
    sp = spec(G22, (1, 1), (2,))
    for lam in [F(2), F(5, 2), F(3)]:
        assert ideal_equal(tau(sp, lam), tau(sp, lam + F(1, 97)))
