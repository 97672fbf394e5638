"""Test ideals of sums of products of determinantal / Pfaffian ideals.

An input is a context plus a finite set of shapes Sigma; it stands for the
sum over sigma in Sigma of the products prime_1^... encoded by sigma.  The
polytope spanned by the gamma vectors of Sigma controls everything:

  * integral closures of powers are read off from realizable ceil vectors,
  * test ideals from realizable floor vectors, shifted by the prime heights,
  * thresholds from an exact min-max linear program over the polytope.

Results are returned as IdealPresentation values: an antichain of symbolic
exponent vectors b, denoting the sum over the antichain of the intersections
prime_i^(b_i).  Ideal comparisons are done at the level of admissible shape
sets (every ideal produced here is generated by products of minors or
Pfaffians, and a shape alpha is admissible for b iff gamma_i(alpha) >= b_i
for all i), never by comparing antichains verbatim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from . import geometry
from .contexts import RingContext, heights
from .diagrams import Diagram
from .errors import ConsistencyError, DomainError, GuardExhausted
from .geometry import BoxQuery, RationalPolytope


# ---------------------------------------------------------------------------
# inputs and presentations

@dataclass(frozen=True)
class ProductIdealSpec:
    """A context plus a deduplicated set of shapes, each of height <= k."""

    context: RingContext
    sigmas: tuple[Diagram, ...]

    def __post_init__(self):
        sigmas = tuple(sorted(set(self.sigmas)))
        object.__setattr__(self, "sigmas", sigmas)
        if not sigmas:
            raise DomainError("a product ideal spec needs at least one shape")
        k = self.context.k
        for sigma in sigmas:
            if sigma.height > k:
                raise DomainError(
                    f"shape {sigma.parts!r} too tall for a context with {k} primes"
                )

    def to_json(self) -> dict:
        return {
            "context": self.context.to_json(),
            "sigmas": [s.to_json() for s in self.sigmas],
        }

    @classmethod
    def from_json(cls, data) -> "ProductIdealSpec":
        if not isinstance(data, dict):
            raise DomainError(f"bad product ideal spec JSON: {data!r}")
        return cls(
            RingContext.from_json(data.get("context")),
            tuple(Diagram.from_json(s) for s in data.get("sigmas", [])),
        )


def _minimal_vectors(vectors: Iterable[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    """Componentwise-minimal antichain of a finite set of integer vectors."""
    kept: list[tuple[int, ...]] = []
    for v in sorted(set(vectors), key=lambda u: (sum(u), u)):
        if not any(all(x <= y for x, y in zip(u, v)) for u in kept):
            kept.append(v)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class IdealPresentation:
    """An antichain of symbolic exponent vectors over a context.

    Entry b_i = 0 imposes no condition at the i-th prime; the presentation
    whose antichain is the zero vector alone is the unit ideal.
    """

    context: RingContext
    antichain: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = self.context.k
        vecs = tuple(sorted(tuple(int(x) for x in b) for b in self.antichain))
        object.__setattr__(self, "antichain", vecs)
        if not vecs:
            raise DomainError("presentation antichain must be nonempty")
        for b in vecs:
            if len(b) != k:
                raise DomainError(f"exponent vector {b!r} has length != {k}")
            if any(x < 0 for x in b):
                raise DomainError(f"exponent vector {b!r} has a negative entry")
        for u in vecs:
            for v in vecs:
                if u != v and all(x <= y for x, y in zip(u, v)):
                    raise DomainError(f"{u!r} <= {v!r}: not an antichain")

    @classmethod
    def reduced(cls, context: RingContext, vectors) -> "IdealPresentation":
        return cls(context, _minimal_vectors(tuple(tuple(v) for v in vectors)))

    @classmethod
    def unit(cls, context: RingContext) -> "IdealPresentation":
        return cls(context, ((0,) * context.k,))

    @property
    def is_unit(self) -> bool:
        return self.antichain == ((0,) * self.context.k,)

    def admits_shape(self, alpha: Diagram) -> bool:
        """Does a product of shape alpha belong to the presented ideal?"""
        gv = alpha.gamma_vector(self.context.k)
        return any(all(g >= b for g, b in zip(gv, vec)) for vec in self.antichain)

    def to_json(self) -> dict:
        return {
            "context": self.context.to_json(),
            "antichain": [list(b) for b in self.antichain],
        }

    @classmethod
    def from_json(cls, data) -> "IdealPresentation":
        if not isinstance(data, dict):
            raise DomainError(f"bad presentation JSON: {data!r}")
        context = RingContext.from_json(data.get("context"))
        vecs = data.get("antichain")
        if not isinstance(vecs, list):
            raise DomainError("presentation JSON needs an 'antichain' array")
        return cls.reduced(context, [tuple(v) for v in vecs])


# ---------------------------------------------------------------------------
# polytope, closure, test ideal

def gamma_polytope(spec: ProductIdealSpec) -> RationalPolytope:
    """Convex hull of the gamma vectors of the input shapes."""
    k = spec.context.k
    return geometry.hull([s.gamma_vector(k) for s in spec.sigmas])


def e_vector(spec: ProductIdealSpec) -> tuple[int, ...]:
    """Componentwise largest symbolic powers containing the whole ideal:
    e_i = min over sigma of gamma_i(sigma)."""
    k = spec.context.k
    vecs = [s.gamma_vector(k) for s in spec.sigmas]
    return tuple(min(v[i] for v in vecs) for i in range(k))


def integral_closure(spec: ProductIdealSpec, s: int,
                     guard: Optional[int] = None) -> IdealPresentation:
    """Integral closure of the s-th power, as a reduced presentation.

    The realizable vectors ceil(s*a) over the gamma polytope describe the
    closure; componentwise-minimal ones already generate the sum.
    """
    if s < 1:
        raise DomainError(f"power must be a positive integer, got {s}")
    vs = geometry.ceil_vectors(gamma_polytope(spec), s, guard=guard)
    return IdealPresentation.reduced(spec.context, vs)


def _clamp_shift(v: Sequence[int], h: Sequence[int]) -> tuple[int, ...]:
    return tuple(max(0, x + 1 - w) for x, w in zip(v, h))


def test_ideal(spec: ProductIdealSpec, lam,
               guard: Optional[int] = None) -> IdealPresentation:
    """The test ideal with coefficient lam, as a reduced presentation.

    Every realizable floor vector v = floor(lam * a), a in the gamma
    polytope, contributes the intersection with exponents
    max(0, v_i + 1 - height_i); the result is their minimal antichain.
    """
    lam = Fraction(lam)
    if lam <= 0:
        raise DomainError(f"coefficient must be positive, got {lam}")
    h = heights(spec.context)
    vs = geometry.floor_vectors(gamma_polytope(spec), lam, guard=guard)
    return IdealPresentation.reduced(
        spec.context, (_clamp_shift(v, h) for v in vs)
    )


def test_ideal_closed_form(context: RingContext, sigma: Diagram,
                           lam) -> IdealPresentation:
    """Single-product closed form: exponents floor(lam*gamma_i)+1-height_i."""
    lam = Fraction(lam)
    if lam <= 0:
        raise DomainError(f"coefficient must be positive, got {lam}")
    spec = ProductIdealSpec(context, (sigma,))  # height validation
    h = heights(context)
    gv = sigma.gamma_vector(context.k)
    b = tuple(max(0, math.floor(lam * g) + 1 - w) for g, w in zip(gv, h))
    return IdealPresentation(spec.context, (b,))


def membership(spec: ProductIdealSpec, lam, alpha: Diagram,
               guard: Optional[int] = None) -> bool:
    """Is a product of shape alpha in the test ideal with coefficient lam?

    Decided directly by box feasibility: some polytope point a must satisfy
    a_i < (gamma_i(alpha) + height_i) / lam for every i.
    """
    lam = Fraction(lam)
    if lam <= 0:
        raise DomainError(f"coefficient must be positive, got {lam}")
    k = spec.context.k
    if alpha.height > k:
        raise DomainError(
            f"shape {alpha.parts!r} too tall for a context with {k} primes"
        )
    h = heights(spec.context)
    gv = alpha.gamma_vector(k)
    poly = gamma_polytope(spec)
    query = BoxQuery.build(
        k, uppers={i: (Fraction(gv[i] + h[i]) / lam, True) for i in range(k)}
    )
    return geometry.feasible(poly, query) is not None


# ---------------------------------------------------------------------------
# shape-level ideal comparison

# Shapes are handled in transpose coordinates: a weakly decreasing vector c
# of column lengths (length k, entries >= 0) corresponds to the diagram with
# those columns, and gamma_t = sum of c[t-1:].  Containment of diagrams is
# componentwise order on c, so containment-minimal generating shapes are the
# componentwise-minimal c with all tail sums over the constraint vector.

MAX_SHAPE_GUARD = 4096


def _tails_ok(c: tuple[int, ...], b: tuple[int, ...]) -> bool:
    total = 0
    for j in range(len(c) - 1, -1, -1):
        total += c[j]
        if total < b[j]:
            return False
    return True


@lru_cache(maxsize=None)
def _minimal_profiles(b: tuple[int, ...], guard_rows: int) -> tuple[tuple[int, ...], ...]:
    """Componentwise-minimal column profiles c with tail sums >= b.

    Enumerates weakly decreasing vectors with first entry <= guard_rows,
    pruned by the best-possible tail sums of a completion.
    """
    k = len(b)
    members: list[tuple[int, ...]] = []

    def gen(pos: int, prev: int, acc: tuple[int, ...], total: int):
        if pos == k:
            if _tails_ok(acc, b):
                members.append(acc)
            return
        # entries from here on are at most prev; prune impossible tails
        for t in range(k):
            best = sum(acc[t:pos]) + (k - max(t, pos)) * prev
            if best < b[t]:
                return
        for value in range(prev, -1, -1):
            gen(pos + 1, value, acc + (value,), total + value)

    gen(0, guard_rows, (), 0)
    members.sort(key=lambda c: (sum(c), c))
    kept: list[tuple[int, ...]] = []
    for c in members:
        if not any(all(x <= y for x, y in zip(u, c)) for u in kept):
            kept.append(c)
    return tuple(kept)


def _profile_to_diagram(c: tuple[int, ...]) -> Diagram:
    stripped = tuple(x for x in c if x > 0)
    return Diagram(stripped).transpose()


def _profile_admitted(c: tuple[int, ...], antichain) -> bool:
    k = len(c)
    tails = [0] * (k + 1)
    for j in range(k - 1, -1, -1):
        tails[j] = tails[j + 1] + c[j]
    return any(all(tails[j] >= b[j] for j in range(k)) for b in antichain)


def _minimal_profiles_of(pres: IdealPresentation) -> list[tuple[int, ...]]:
    k = pres.context.k
    out: list[tuple[int, ...]] = []
    for b in pres.antichain:
        big = max(b) if any(b) else 0
        guard = big + k
        while True:
            profiles = _minimal_profiles(b, guard)
            if profiles and max(c[0] for c in profiles) >= guard:
                guard *= 2
                if guard > MAX_SHAPE_GUARD:
                    raise GuardExhausted(
                        f"shape search rectangle grew past {MAX_SHAPE_GUARD} rows"
                    )
                continue
            break
        out.extend(profiles)
    return out


def minimal_generating_shapes(pres: IdealPresentation) -> tuple[Diagram, ...]:
    """Containment-minimal shapes admitted by the presentation.

    Each returned shape is certified minimal: removing any single box leaves
    the admitted family entirely.
    """
    profiles = _minimal_vectors(_minimal_profiles_of(pres))
    for c in profiles:
        for j in range(len(c)):
            if c[j] == 0 or (j + 1 < len(c) and c[j] - 1 < c[j + 1]):
                continue
            smaller = c[:j] + (c[j] - 1,) + c[j + 1:]
            if _profile_admitted(smaller, pres.antichain):
                raise ConsistencyError(
                    f"non-minimal shape {c!r} escaped the minimality search"
                )
    shapes = [_profile_to_diagram(c) for c in profiles]
    return tuple(sorted(shapes, key=lambda d: (d.size, d.parts)))


def ideal_contains(inner: IdealPresentation, outer: IdealPresentation) -> bool:
    """Shape-level inclusion: every generating shape of `inner` is admitted
    by `outer`."""
    if inner.context != outer.context:
        raise DomainError("cannot compare presentations over different contexts")
    return all(
        _profile_admitted(c, outer.antichain)
        for c in _minimal_profiles_of(inner)
    )


def ideal_equal(p1: IdealPresentation, p2: IdealPresentation) -> bool:
    """Shape-level equality (antichain equality is not trusted by itself)."""
    if p1.context != p2.context:
        raise DomainError("cannot compare presentations over different contexts")
    if p1.antichain == p2.antichain:
        return True
    return ideal_contains(p1, p2) and ideal_contains(p2, p1)


# ---------------------------------------------------------------------------
# thresholds and jumping numbers

def fpt(spec: ProductIdealSpec) -> Fraction:
    """The threshold: largest coefficient with unit test ideal is just below
    this value.  Computed as the reciprocal of the exact min-max program."""
    return 1 / geometry.min_max_ratio(gamma_polytope(spec), heights(spec.context))


def jumping_numbers(context: RingContext, sigma: Diagram, lam_max,
                    ) -> list[Fraction]:
    """All coefficients in (0, lam_max] where the single-product test ideal
    strictly changes.

    Candidates are the points (height_i + j) / gamma_i(sigma); each is kept
    only when the closed form verifiably differs from its value on the
    previous candidate interval.
    """
    lam_max = Fraction(lam_max)
    if lam_max <= 0:
        raise DomainError(f"sweep bound must be positive, got {lam_max}")
    spec = ProductIdealSpec(context, (sigma,))
    h = heights(context)
    gv = sigma.gamma_vector(context.k)
    candidates = _threshold_candidates(h, [gv], lam_max)
    out = []
    prev = IdealPresentation.unit(context)
    for cand in candidates:
        cur = test_ideal_closed_form(context, sigma, cand)
        if not ideal_equal(cur, prev):
            out.append(cand)
        prev = cur
    return out


def _threshold_candidates(h, vectors, lam_max) -> list[Fraction]:
    cands = set()
    for vec in vectors:
        for hi, vi in zip(h, vec):
            if vi <= 0:
                continue
            j = 0
            while True:
                cand = Fraction(hi + j) / Fraction(vi)
                if cand > lam_max:
                    break
                cands.add(cand)
                j += 1
    return sorted(cands)


@dataclass(frozen=True)
class JumpReport:
    jumps: tuple[Fraction, ...]
    metadata: dict = field(compare=False)

    def to_json(self) -> dict:
        return {
            "jumps": [geometry.format_rational(j) for j in self.jumps],
            "metadata": dict(self.metadata),
        }


def jumping_numbers_sum(spec: ProductIdealSpec, lam_max,
                        guard: Optional[int] = None) -> JumpReport:
    """Verified jumping numbers of a sum spec in (0, lam_max].

    Candidates come from the polytope vertices, from every summand shape,
    and from the threshold itself; a candidate is reported only when the
    test ideal verifiably changes across it (checked against the midpoint of
    the preceding candidate gap).  Every reported jump is therefore real; a
    completeness certificate for the candidate set is not available for
    genuine sums, and singleton specs are exact.
    """
    lam_max = Fraction(lam_max)
    if lam_max <= 0:
        raise DomainError(f"sweep bound must be positive, got {lam_max}")
    context = spec.context
    h = heights(context)
    poly = gamma_polytope(spec)
    vectors = [v for v in poly.vertices]
    vectors += [s.gamma_vector(context.k) for s in spec.sigmas]
    candidates = set(_threshold_candidates(h, vectors, lam_max))
    try:
        threshold = fpt(spec)
        if threshold <= lam_max:
            candidates.add(threshold)
    except DomainError:
        # spec already contains the unit ideal; nothing ever jumps
        return JumpReport((), {"complete": True, "candidates": "unit ideal"})
    ordered = sorted(candidates)

    jumps = []
    prev_point = Fraction(0)
    cache: dict[Fraction, IdealPresentation] = {}

    def tau(lam):
        if lam not in cache:
            cache[lam] = test_ideal(spec, lam, guard=guard)
        return cache[lam]

    for cand in ordered:
        before = (
            IdealPresentation.unit(context)
            if prev_point == 0
            else tau((prev_point + cand) / 2)
        )
        if not ideal_equal(tau(cand), before):
            jumps.append(cand)
        prev_point = cand

    singleton = len(spec.sigmas) == 1
    metadata = {
        "complete": True if singleton else "unverified",
        "candidates": "polytope vertices, summand shapes, threshold",
    }
    return JumpReport(tuple(jumps), metadata)


# ---------------------------------------------------------------------------
# structural checks

@dataclass(frozen=True)
class FloatingReport:
    contained: bool
    equal: bool
    bound: IdealPresentation

    def to_json(self) -> dict:
        return {
            "contained": self.contained,
            "equal": self.equal,
            "bound": self.bound.to_json(),
        }


def floating_check(spec: ProductIdealSpec, lam,
                   guard: Optional[int] = None) -> FloatingReport:
    """Compare the test ideal against the valuation bound built from the
    componentwise exponents e_i = min_sigma gamma_i(sigma).

    Containment in the bound holds unconditionally; a violation means the
    engine itself is broken and aborts.  Equality is the floating property.
    """
    lam = Fraction(lam)
    if lam <= 0:
        raise DomainError(f"coefficient must be positive, got {lam}")
    h = heights(spec.context)
    ev = e_vector(spec)
    bound_vec = tuple(
        max(0, math.floor(lam * e) + 1 - w) for e, w in zip(ev, h)
    )
    bound = IdealPresentation(spec.context, (bound_vec,))
    tau = test_ideal(spec, lam, guard=guard)
    contained = ideal_contains(tau, bound)
    if not contained:
        raise ConsistencyError(
            f"test ideal escapes its valuation bound at coefficient {lam}"
        )
    equal = ideal_contains(bound, tau)
    return FloatingReport(contained=True, equal=equal, bound=bound)


@dataclass(frozen=True)
class BoundsReport:
    lower: Fraction
    value: Fraction
    upper: Fraction

    def to_json(self) -> dict:
        return {
            "lower": geometry.format_rational(self.lower),
            "fpt": geometry.format_rational(self.value),
            "upper": geometry.format_rational(self.upper),
        }


def fpt_bounds_check(context: RingContext, sigma: Diagram) -> BoundsReport:
    """Sandwich the single-product threshold between height/degree and height.

    The relevant height is that of the tallest factor's prime; the degree is
    the box count (single-product ideals are generated in one degree).  A
    violation aborts: these bounds hold for every homogeneous ideal.
    """
    if not sigma.parts:
        raise DomainError("threshold bounds need a nonempty shape")
    spec = ProductIdealSpec(context, (sigma,))
    h = heights(context)
    ht = Fraction(h[sigma.height - 1])
    degree = sigma.size
    value = fpt(spec)
    lower = ht / degree
    if not (lower <= value <= ht):
        raise ConsistencyError(
            f"threshold {value} escapes [{lower}, {ht}] for shape {sigma.parts!r}"
        )
    return BoundsReport(lower=lower, value=value, upper=ht)
