"""Newton-polytope test ideals of monomial ideals.

The test ideal of a monomial ideal with coefficient lam is the monomial
ideal generated by x^floor(lam*a) over all points a of the Newton
polyhedron.  Floors are monotone along the recession cone, so the scan only
ever needs the bounded hull of the minimal generators; thresholds come from
the same exact min-max program as in the determinantal engine, with all
weights 1.  The floor form is right-continuous and is the normative one
here (the closed-lattice variant "b+1 in lam*NP" differs at the threshold
itself, where it would wrongly return the unit ideal).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import geometry
from .errors import DomainError
from .geometry import BoxQuery, RationalPolytope


def minimalize(vectors: Iterable[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    """Componentwise-minimal antichain of exponent vectors."""
    kept: list[tuple[int, ...]] = []
    for v in sorted(set(vectors), key=lambda u: (sum(u), u)):
        if not any(all(x <= y for x, y in zip(u, v)) for u in kept):
            kept.append(v)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Finite monomial ideal, stored as the minimal generator antichain."""

    nvars: int
    gens: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.nvars < 1:
            raise DomainError(f"need at least one variable, got {self.nvars}")
        vecs = []
        for g in self.gens:
            vec = tuple(int(x) for x in g)
            if len(vec) != self.nvars:
                raise DomainError(f"exponent vector {g!r} has length != {self.nvars}")
            if any(x < 0 for x in vec):
                raise DomainError(f"exponent vector {g!r} has a negative entry")
            vecs.append(vec)
        if not vecs:
            raise DomainError("a monomial ideal needs at least one generator")
        object.__setattr__(self, "gens", minimalize(vecs))

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.nvars,)

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    def contains_exponent(self, b: Sequence[int]) -> bool:
        b = tuple(int(x) for x in b)
        if len(b) != self.nvars:
            raise DomainError(f"exponent {b!r} has length != {self.nvars}")
        return any(all(x >= g for x, g in zip(b, gen)) for gen in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        if other.nvars != self.nvars:
            raise DomainError("variable counts differ")
        return all(self.contains_exponent(g) for g in other.gens)

    def to_json(self) -> dict:
        return {"nvars": self.nvars, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data) -> "MonomialIdeal":
        if not isinstance(data, dict):
            raise DomainError(f"bad monomial ideal JSON: {data!r}")
        try:
            return cls(int(data["nvars"]), tuple(tuple(g) for g in data["gens"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"bad monomial ideal JSON {data!r}: {exc}") from None

    @classmethod
    def unit(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, ((0,) * nvars,))


@dataclass(frozen=True)
class NewtonPolyhedron:
    """Hull of the generators plus the nonnegative orthant as recession cone.

    halfspaces is the irredundant H-description of the unbounded region; all
    normals are componentwise nonnegative.
    """

    nvars: int
    base: RationalPolytope
    halfspaces: tuple[tuple[tuple[int, ...], Fraction], ...]

    def contains(self, point: Sequence) -> bool:
        p = [Fraction(c) for c in point]
        if len(p) != self.nvars:
            raise DomainError(f"point {point!r} has length != {self.nvars}")
        return all(
            sum(n[i] * p[i] for i in range(self.nvars)) >= c
            for n, c in self.halfspaces
        )

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "vertices": [geometry.vector_to_json(v) for v in self.base.vertices],
            "halfspaces": [
                {"normal": list(n), "offset": geometry.format_rational(c)}
                for n, c in self.halfspaces
            ],
        }


def newton(ideal: MonomialIdeal) -> NewtonPolyhedron:
    """Newton polyhedron: generator hull swept by the nonnegative orthant.

    Derived exactly by projecting {a : a >= convex combination of generators}
    onto the ambient coordinates and pruning redundant inequalities.
    """
    n = ideal.nvars
    base = geometry.hull(ideal.gens)
    verts = base.vertices
    r = len(verts)
    nvars = n + r
    ineqs = []
    for i in range(n):
        # a_i - sum_j mu_j v_j[i] >= 0
        coeffs = [Fraction(0)] * nvars
        coeffs[i] = Fraction(1)
        for j, v in enumerate(verts):
            coeffs[n + j] = -v[i]
        ineqs.append((tuple(coeffs), Fraction(0), False))
    for j in range(r):
        coeffs = [Fraction(0)] * nvars
        coeffs[n + j] = Fraction(1)
        ineqs.append((tuple(coeffs), Fraction(0), False))
    ones = [Fraction(0)] * nvars
    for j in range(r):
        ones[n + j] = Fraction(1)
    eqs = [(tuple(ones), Fraction(1))]

    proj, leftover = geometry._project(ineqs, eqs, nvars, keep=set(range(n)))
    assert not leftover, "equalities cannot survive in an upward-closed region"
    system = geometry._tighten([(c[:n], rhs, s) for c, rhs, s in proj])
    assert system is not None
    system = geometry._drop_redundant(system, n)
    halfspaces = []
    for coeffs, rhs, strict in sorted(system):
        assert not strict
        assert all(c >= 0 for c in coeffs), "mixed-sign normal on an upward set"
        halfspaces.append((coeffs, rhs))
    return NewtonPolyhedron(nvars=n, base=base, halfspaces=tuple(halfspaces))


def test_ideal_monomial(ideal: MonomialIdeal, lam,
                        guard: Optional[int] = None) -> MonomialIdeal:
    """Floor-form test ideal: minimal realizable floor(lam * a) exponents."""
    lam = Fraction(lam)
    if lam <= 0:
        raise DomainError(f"coefficient must be positive, got {lam}")
    base = geometry.hull(ideal.gens)
    floors = geometry.floor_vectors(base, lam, guard=guard)
    return MonomialIdeal(ideal.nvars, minimalize(floors))


def floor_membership(ideal: MonomialIdeal, lam, b: Sequence[int],
                     ) -> bool:
    """Direct membership route: x^b lies in the floor-form test ideal iff
    some hull point a has lam * a_i < b_i + 1 for every coordinate."""
    lam = Fraction(lam)
    if lam <= 0:
        raise DomainError(f"coefficient must be positive, got {lam}")
    b = tuple(int(x) for x in b)
    if len(b) != ideal.nvars or any(x < 0 for x in b):
        raise DomainError(f"bad exponent {b!r}")
    base = geometry.hull(ideal.gens)
    query = BoxQuery.build(
        ideal.nvars,
        uppers={i: (Fraction(b[i] + 1) / lam, True) for i in range(ideal.nvars)},
    )
    return geometry.feasible(base, query) is not None


def fpt_monomial(ideal: MonomialIdeal) -> Fraction:
    """Threshold of a proper monomial ideal: reciprocal of the smallest s
    with s*(1,...,1) inside the Newton polyhedron, via the exact program."""
    if not ideal.is_proper:
        raise DomainError("the unit ideal has no threshold")
    base = geometry.hull(ideal.gens)
    return 1 / geometry.min_max_ratio(base, (1,) * ideal.nvars)


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Minkowski sum of the generator sets, re-minimalized."""
    if a.nvars != b.nvars:
        raise DomainError("variable counts differ")
    sums = [
        tuple(x + y for x, y in zip(g, h)) for g in a.gens for h in b.gens
    ]
    return MonomialIdeal(a.nvars, minimalize(sums))
