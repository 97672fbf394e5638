"""Cross-module invariant suite behind the CLI `verify` command.

Each check is a fast, deterministic distillation of an invariant that ties
two modules together; the full evidence lives in the pytest suite.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import engine, frobenius, geometry, monomial
from .contexts import RingContext, heights, witness_shape
from .diagrams import Diagram, iter_diagrams

F = Fraction


def _check_gamma_column_identity():
    for sigma in iter_diagrams(10):
        cols = sigma.transpose().parts
        for t in range(1, sigma.height + 2):
            if sigma.gamma(t) != sum(cols[t - 1:]):
                return f"gamma mismatch at {sigma.parts!r}, t={t}"
    return None


def _check_transpose_involution():
    for sigma in iter_diagrams(10):
        if sigma.transpose().transpose() != sigma:
            return f"involution broken at {sigma.parts!r}"
    return None


def _check_concat_additivity():
    small = list(iter_diagrams(5))
    for a, b in itertools.product(small, small):
        merged = a.concat(b)
        for t in range(1, max(a.height, b.height) + 2):
            if merged.gamma(t) != a.gamma(t) + b.gamma(t):
                return f"additivity broken at {a.parts!r} * {b.parts!r}"
    return None


def _check_witness_heights():
    contexts = (
        [RingContext.generic(m, n) for n in range(1, 7) for m in range(1, n + 1)]
        + [RingContext.symmetric(n) for n in range(1, 7)]
        + [RingContext.skew_symmetric(n) for n in range(2, 8)]
    )
    for c in contexts:
        if witness_shape(c).gamma_vector(c.k) != heights(c):
            return f"witness heights broken for {c.to_json()}"
    return None


def _check_threshold_closed_form():
    for n in range(1, 5):
        for m in range(1, n + 1):
            c = RingContext.generic(m, n)
            for t in range(1, m + 1):
                expected = min(
                    F((m - i + 1) * (n - i + 1), t - i + 1)
                    for i in range(1, t + 1)
                )
                got = engine.fpt(engine.ProductIdealSpec(c, (Diagram((t,)),)))
                if got != expected:
                    return f"threshold mismatch at m={m}, n={n}, t={t}"
    return None


def _check_singleton_consistency():
    cases = [
        (RingContext.generic(2, 2), (2,)),
        (RingContext.generic(2, 3), (2, 1)),
        (RingContext.symmetric(3), (2, 2)),
        (RingContext.skew_symmetric(5), (2, 1)),
    ]
    for context, parts in cases:
        sigma = Diagram(parts)
        spec = engine.ProductIdealSpec(context, (sigma,))
        for lam in (F(1, 2), F(1), F(3, 2), F(2)):
            if not engine.ideal_equal(
                engine.test_ideal(spec, lam),
                engine.test_ideal_closed_form(context, sigma, lam),
            ):
                return f"singleton mismatch at {parts!r}, lam={lam}"
    return None


def _check_valuation_bound():
    specs = [
        engine.ProductIdealSpec(
            RingContext.generic(2, 2), (Diagram((1, 1)), Diagram((2,)))
        ),
        engine.ProductIdealSpec(
            RingContext.symmetric(3), (Diagram((2, 1)), Diagram((3,)))
        ),
    ]
    for spec in specs:
        for lam in (F(1), F(2), F(5, 2)):
            if not engine.floating_check(spec, lam).contained:
                return f"valuation bound broken for {spec.to_json()}"
    return None


def _check_monomial_oracle():
    ideal = monomial.MonomialIdeal(2, ((2, 0), (0, 3)))
    for lam in (F(1, 2), F(1)):
        expected = monomial.test_ideal_monomial(ideal, lam)
        for p in (2, 3):
            report = frobenius.tau_oracle(ideal, lam, p, e_max=4)
            if not report.stabilized or report.tau != expected:
                return f"oracle disagrees at lam={lam}, p={p}"
    return None


def _check_maximal_ideal_powers():
    for nvars in (2, 3):
        gens = tuple(
            tuple(int(i == j) for i in range(nvars)) for j in range(nvars)
        )
        m = monomial.MonomialIdeal(nvars, gens)
        if monomial.fpt_monomial(m) != nvars:
            return f"threshold of the maximal ideal in {nvars} variables"
        for lam in (F(nvars), F(nvars) + F(1, 2), F(nvars) + 1):
            got = monomial.test_ideal_monomial(m, lam)
            s = int(lam) + 1 - nvars
            want = tuple(sorted(
                e for e in itertools.product(range(s + 1), repeat=nvars)
                if sum(e) == s
            ))
            if got.gens != want:
                return f"maximal-ideal power wrong at nvars={nvars}, lam={lam}"
    return None


def _check_floor_scaling():
    poly = geometry.hull([(2, 0), (0, 3)])
    for s in (2, 3):
        if geometry.floor_vectors(poly, F(5, 4)) != geometry.floor_vectors(
            poly.scaled(s), F(5, 4) / s
        ):
            return f"floor scaling broken at s={s}"
    return None


CHECKS = (
    ("diagram-gamma-column-identity", _check_gamma_column_identity),
    ("diagram-transpose-involution", _check_transpose_involution),
    ("diagram-concat-additivity", _check_concat_additivity),
    ("context-witness-heights", _check_witness_heights),
    ("engine-threshold-closed-form", _check_threshold_closed_form),
    ("engine-singleton-consistency", _check_singleton_consistency),
    ("engine-valuation-bound", _check_valuation_bound),
    ("monomial-oracle-agreement", _check_monomial_oracle),
    ("monomial-maximal-ideal-powers", _check_maximal_ideal_powers),
    ("geometry-floor-scaling", _check_floor_scaling),
)


def run_all() -> dict:
    checks = []
    for name, fn in CHECKS:
        detail = fn()
        checks.append({
            "name": name,
            "pass": detail is None,
            **({"detail": detail} if detail else {}),
        })
    return {"ok": all(c["pass"] for c in checks), "checks": checks}
