"""Exact rational polyhedra in low dimension.

Everything here runs on `fractions.Fraction`; no floating point is used
anywhere.  Inequalities are triples (coeffs, rhs, strict) meaning
sum(coeffs[i] * x[i]) >= rhs, with strict=True upgrading >= to >.
Feasibility, projection and the small linear program are all driven by
Fourier-Motzkin elimination, which propagates strictness exactly and yields
rational witness points by back substitution.  Convex hulls are derived by
projecting the barycentric-coordinate system onto the ambient coordinates and
pruning redundant inequalities, so degenerate (lower-dimensional) polytopes
need no special casing.

Intended scale: dimension <= ~10 and a handful of vertices, which is all the
shape and monomial data in this package ever produces.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import DomainError, GuardExhausted

Vec = tuple[Fraction, ...]
Ineq = tuple[tuple[int, ...], Fraction, bool]

DEFAULT_GUARD_CELLS = 1_000_000


# ---------------------------------------------------------------------------
# rational serialization ("p/q" strings, canonical lowest terms)

def format_rational(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(s) -> Fraction:
    try:
        if isinstance(s, str):
            return Fraction(s)
        if isinstance(s, int):
            return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad rational {s!r}: {exc}") from None
    raise DomainError(f"rationals must be 'p/q' strings or integers, got {s!r}")


def vector_to_json(v: Sequence) -> list[str]:
    return [format_rational(c) for c in v]


def vector_from_json(data) -> Vec:
    if not isinstance(data, (list, tuple)):
        raise DomainError(f"expected an array of rationals: {data!r}")
    return tuple(parse_rational(c) for c in data)


# ---------------------------------------------------------------------------
# inequality systems

def _normalize(coeffs, rhs, strict) -> Ineq:
    """Scale to primitive integer coefficients (positive multiple only)."""
    fracs = [Fraction(c) for c in coeffs]
    den = 1
    for c in fracs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in fracs]
    rhs = Fraction(rhs) * den
    g = math.gcd(*ints) if any(ints) else 1
    if g > 1:
        ints = [c // g for c in ints]
        rhs = rhs / g
    return tuple(ints), rhs, strict


def _tighten(ineqs: Iterable) -> Optional[list[Ineq]]:
    """Normalize, drop trivial rows, keep the strongest bound per normal.

    Returns None when a constant row is already infeasible.
    """
    best: dict[tuple[int, ...], tuple[Fraction, bool]] = {}
    for coeffs, rhs, strict in ineqs:
        coeffs, rhs, strict = _normalize(coeffs, rhs, strict)
        if not any(coeffs):
            if rhs > 0 or (strict and rhs == 0):
                return None
            continue
        cur = best.get(coeffs)
        if cur is None or (rhs, strict) > cur:
            best[coeffs] = (rhs, strict)
    return [(c, r, s) for c, (r, s) in best.items()]


def _eliminate(ineqs: list[Ineq], j: int) -> Optional[list[Ineq]]:
    """Project the system onto the coordinates other than x_j."""
    pos, neg, rest = [], [], []
    for row in ineqs:
        cj = row[0][j]
        (pos if cj > 0 else neg if cj < 0 else rest).append(row)
    out = list(rest)
    for cp, rp, sp in pos:
        a = cp[j]
        for cn, rn, sn in neg:
            b = -cn[j]
            coeffs = tuple(b * cp[i] + a * cn[i] for i in range(len(cp)))
            out.append((coeffs, b * rp + a * rn, sp or sn))
    return _tighten(out)


def _pick_var(ineqs: list[Ineq], candidates: list[int]) -> int:
    def cost(j):
        p = sum(1 for c, _, _ in ineqs if c[j] > 0)
        n = sum(1 for c, _, _ in ineqs if c[j] < 0)
        return p * n
    return min(candidates, key=lambda j: (cost(j), j))


def _pick_value(lo, hi) -> Fraction:
    if lo is None and hi is None:
        return Fraction(0)
    if hi is None:
        v, s = lo
        return v + 1 if s else v
    if lo is None:
        v, s = hi
        return v - 1 if s else v
    (lv, ls), (hv, hs) = lo, hi
    if lv == hv:
        assert not ls and not hs, "empty interval survived elimination"
        return lv
    assert lv < hv, "inverted interval survived elimination"
    return (lv + hv) / 2


def _fm_feasible(ineqs, nvars: int, want_witness: bool = True) -> Optional[Vec]:
    """Witness point of the system, or None if infeasible.

    With want_witness=False returns an empty tuple on feasibility (cheaper).
    """
    cur = _tighten(ineqs)
    if cur is None:
        return None
    stages: list[tuple[list[Ineq], int]] = []
    remaining = list(range(nvars))
    while remaining:
        j = _pick_var(cur, remaining)
        stages.append((cur, j))
        remaining.remove(j)
        cur = _eliminate(cur, j)
        if cur is None:
            return None
    if not want_witness:
        return ()
    x: list[Optional[Fraction]] = [None] * nvars
    for system, j in reversed(stages):
        lo = hi = None
        for coeffs, rhs, strict in system:
            cj = coeffs[j]
            if cj == 0:
                continue
            acc = rhs - sum(
                coeffs[i] * x[i]
                for i in range(len(coeffs))
                if i != j and coeffs[i]
            )
            val = acc / cj
            if cj > 0:
                if lo is None or val > lo[0]:
                    lo = (val, strict)
                elif val == lo[0]:
                    lo = (val, lo[1] or strict)
            else:
                if hi is None or val < hi[0]:
                    hi = (val, strict)
                elif val == hi[0]:
                    hi = (val, hi[1] or strict)
        x[j] = _pick_value(lo, hi)
    return tuple(x)  # type: ignore[arg-type]


def _reduce_equalities(ineqs, eqs, pivot_vars):
    """Gaussian-substitute equalities, pivoting only on the given variables.

    eqs rows are (coeffs, rhs) tuples of Fractions meaning coeffs . x == rhs.
    Returns (ineqs', leftover_eqs, subs) where subs is the list of solved rows
    (pivot, coeffs, rhs) in pivot order, or None when the system is already
    inconsistent.  leftover equalities involve no pivot variable.
    """
    ineqs = [(tuple(Fraction(c) for c in cs), Fraction(r), s) for cs, r, s in ineqs]
    queue = [(tuple(Fraction(c) for c in cs), Fraction(r)) for cs, r in eqs]
    subs = []
    leftover = []
    while queue:
        coeffs, rhs = queue.pop(0)
        piv = next((j for j in pivot_vars if coeffs[j] != 0), None)
        if piv is None:
            if any(coeffs):
                leftover.append((coeffs, rhs))
            elif rhs != 0:
                return None
            continue

        def subst(row_coeffs, row_rhs):
            d = row_coeffs[piv]
            if d == 0:
                return row_coeffs, row_rhs
            f = d / coeffs[piv]
            new = tuple(rc - f * c for rc, c in zip(row_coeffs, coeffs))
            return new, row_rhs - f * rhs

        queue = [subst(c, r) for c, r in queue]
        ineqs = [subst(c, r) + (s,) for c, r, s in ineqs]
        subs.append((piv, coeffs, rhs))
    return ineqs, leftover, subs


def _project(ineqs, eqs, nvars: int, keep: set[int]):
    """H-description of the projection onto the `keep` coordinates.

    Returns (ineqs, leftover_eqs) over the full-length coordinate tuples, with
    all non-keep coefficients zero.
    """
    drop = [j for j in range(nvars) if j not in keep]
    reduced = _reduce_equalities(ineqs, eqs, drop)
    if reduced is None:
        raise DomainError("inconsistent equality system")
    cur, leftover, _ = reduced
    cur = _tighten(cur)
    if cur is None:
        raise DomainError("infeasible system during projection")
    still = [j for j in drop if any(c[j] for c, _, _ in cur)]
    while still:
        j = _pick_var(cur, still)
        cur = _eliminate(cur, j)
        still.remove(j)
        if cur is None:
            raise DomainError("infeasible system during projection")
        still = [j for j in still if any(c[j] for c, _, _ in cur)]
    return cur, leftover


# ---------------------------------------------------------------------------
# polytopes

@dataclass(frozen=True)
class RationalPolytope:
    """V-representation (extreme points) plus derived H-representation.

    facets are pairs (normal, offset) with primitive integer normal, meaning
    normal . a >= offset; equality constraints of lower-dimensional polytopes
    appear as opposite pairs.
    """

    dim: int
    vertices: tuple[Vec, ...]
    facets: tuple[tuple[tuple[int, ...], Fraction], ...]

    def coordinate_range(self, i: int) -> tuple[Fraction, Fraction]:
        vals = [v[i] for v in self.vertices]
        return min(vals), max(vals)

    def facet_system(self) -> list[Ineq]:
        return [(n, c, False) for n, c in self.facets]

    def satisfies_facets(self, point: Sequence) -> bool:
        p = [Fraction(c) for c in point]
        return all(
            sum(n[i] * p[i] for i in range(self.dim)) >= c for n, c in self.facets
        )

    def scaled(self, s) -> "RationalPolytope":
        s = Fraction(s)
        return hull([tuple(s * c for c in v) for v in self.vertices])

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "vertices": [vector_to_json(v) for v in self.vertices],
            "facets": [
                {"normal": list(n), "offset": format_rational(c)}
                for n, c in self.facets
            ],
        }


def _in_hull(point: Vec, others: list[Vec]) -> bool:
    if not others:
        return False
    k = len(point)
    r = len(others)
    eqs = []
    for i in range(k):
        eqs.append((tuple(q[i] for q in others), point[i]))
    eqs.append(((Fraction(1),) * r, Fraction(1)))
    ineqs = []
    for j in range(r):
        coeffs = tuple(Fraction(int(i == j)) for i in range(r))
        ineqs.append((coeffs, Fraction(0), False))
    reduced = _reduce_equalities(ineqs, eqs, list(range(r)))
    if reduced is None:
        return False
    cur, leftover, _ = reduced
    if any(rhs != 0 for _, rhs in leftover):
        return False
    return _fm_feasible(cur, r, want_witness=False) is not None


def _drop_redundant(system: list[Ineq], nvars: int) -> list[Ineq]:
    kept = list(system)
    i = 0
    while i < len(kept):
        coeffs, rhs, _ = kept[i]
        negated = (tuple(-c for c in coeffs), -rhs, True)
        rest = kept[:i] + kept[i + 1:]
        if _fm_feasible(rest + [negated], nvars, want_witness=False) is None:
            kept.pop(i)
        else:
            i += 1
    return kept


def hull(points: Iterable[Sequence]) -> RationalPolytope:
    """Convex hull: extreme points plus an irredundant facet description."""
    pts = sorted({tuple(Fraction(c) for c in p) for p in points})
    if not pts:
        raise DomainError("hull of an empty point set")
    k = len(pts[0])
    if any(len(p) != k for p in pts):
        raise DomainError("hull points must share one dimension")

    verts = [p for p in pts if not _in_hull(p, [q for q in pts if q != p])]

    # Project {a = sum mu_j v_j, sum mu_j = 1, mu >= 0} onto the a coordinates.
    r = len(verts)
    nvars = k + r
    eqs = []
    for i in range(k):
        coeffs = [Fraction(0)] * nvars
        coeffs[i] = Fraction(1)
        for j, v in enumerate(verts):
            coeffs[k + j] = -v[i]
        eqs.append((tuple(coeffs), Fraction(0)))
    ones = [Fraction(0)] * nvars
    for j in range(r):
        ones[k + j] = Fraction(1)
    eqs.append((tuple(ones), Fraction(1)))
    ineqs = []
    for j in range(r):
        coeffs = [Fraction(0)] * nvars
        coeffs[k + j] = Fraction(1)
        ineqs.append((tuple(coeffs), Fraction(0), False))

    proj, leftover = _project(ineqs, eqs, nvars, keep=set(range(k)))
    system = list(proj)
    for coeffs, rhs in leftover:
        system.append((coeffs, rhs, False))
        system.append((tuple(-c for c in coeffs), -rhs, False))
    system = [(c[:k], r, s) for c, r, s in system]
    system = _tighten(system)
    assert system is not None
    system = _drop_redundant(system, k)

    facets = []
    for coeffs, rhs, strict in system:
        assert not strict, "strict facet produced from weak data"
        facets.append((coeffs, rhs))
    facets.sort()

    poly = RationalPolytope(dim=k, vertices=tuple(verts), facets=tuple(facets))
    for v in verts:
        assert poly.satisfies_facets(v), "vertex violates derived facet"
    for n, c in facets:
        assert any(
            sum(n[i] * v[i] for i in range(k)) == c for v in verts
        ), "derived facet tight at no vertex"
    return poly


# ---------------------------------------------------------------------------
# box feasibility

@dataclass(frozen=True)
class BoxQuery:
    """Per-coordinate interval constraints with independent strictness flags.

    lowers/uppers hold None (no constraint) or (bound, strict) pairs.
    """

    lowers: tuple[Optional[tuple[Fraction, bool]], ...]
    uppers: tuple[Optional[tuple[Fraction, bool]], ...]

    def __post_init__(self):
        if len(self.lowers) != len(self.uppers):
            raise DomainError("box bounds must share one dimension")
        for lo, hi in zip(self.lowers, self.uppers):
            if lo is not None and hi is not None and lo[0] > hi[0]:
                raise DomainError(f"empty box interval: {lo[0]} > {hi[0]}")

    @property
    def dim(self) -> int:
        return len(self.lowers)

    @classmethod
    def build(cls, dim: int, lowers=None, uppers=None) -> "BoxQuery":
        """Bounds given as {index: (value, strict)} mappings."""
        lo = [None] * dim
        hi = [None] * dim
        for idx, bound in (lowers or {}).items():
            lo[idx] = (Fraction(bound[0]), bool(bound[1]))
        for idx, bound in (uppers or {}).items():
            hi[idx] = (Fraction(bound[0]), bool(bound[1]))
        return cls(tuple(lo), tuple(hi))

    def constraints(self) -> list:
        out = []
        k = self.dim
        for i, (lo, hi) in enumerate(zip(self.lowers, self.uppers)):
            unit = tuple(Fraction(int(j == i)) for j in range(k))
            if lo is not None:
                out.append((unit, lo[0], lo[1]))
            if hi is not None:
                out.append((tuple(-c for c in unit), -hi[0], hi[1]))
        return out

    def admits(self, point: Sequence) -> bool:
        p = [Fraction(c) for c in point]
        for x, lo, hi in zip(p, self.lowers, self.uppers):
            if lo is not None and (x < lo[0] or (lo[1] and x == lo[0])):
                return False
            if hi is not None and (x > hi[0] or (hi[1] and x == hi[0])):
                return False
        return True


def feasible(poly: RationalPolytope, query: BoxQuery) -> Optional[Vec]:
    """Witness point of the polytope meeting every box constraint, or None."""
    if query.dim != poly.dim:
        raise DomainError(
            f"box dimension {query.dim} does not match polytope dimension {poly.dim}"
        )
    return _fm_feasible(poly.facet_system() + query.constraints(), poly.dim)


# ---------------------------------------------------------------------------
# lattice realizability scans

def _guard_limit(explicit: Optional[int]) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("IT_GUARD_CELLS")
    return int(env) if env else DEFAULT_GUARD_CELLS


def _scan(poly, ranges, bound_maker, guard):
    """Shared depth-first scan over integer boxes with projection pruning."""
    k = poly.dim
    cells = 1
    for lo, hi in ranges:
        cells *= hi - lo + 1
    limit = _guard_limit(guard)
    if cells > limit:
        raise GuardExhausted(
            f"lattice scan of {cells} cells exceeds the guard of {limit}"
        )

    projections = [None] * (k + 1)
    projections[k] = _tighten(poly.facet_system())
    for d in range(k - 1, 0, -1):
        projections[d] = _eliminate(projections[d + 1], d)
        assert projections[d] is not None, "nonempty polytope projected to nothing"

    found: set[tuple[int, ...]] = set()

    def rec(depth: int, prefix: tuple[int, ...], cons: list):
        if depth == k:
            found.add(prefix)
            return
        lo, hi = ranges[depth]
        for value in range(lo, hi + 1):
            extra = bound_maker(depth, value, k)
            system = projections[depth + 1] + cons + extra
            if _fm_feasible(system, depth + 1, want_witness=False) is not None:
                rec(depth + 1, prefix + (value,), cons + extra)

    rec(0, (), [])
    return frozenset(found)


def floor_vectors(poly: RationalPolytope, lam, guard: Optional[int] = None):
    """All integer vectors v with some a in the polytope satisfying
    v_i <= lam * a_i < v_i + 1 for every coordinate, i.e. the realizable
    values of floor(lam * a)."""
    lam = Fraction(lam)
    if lam <= 0:
        raise DomainError(f"scaling factor must be positive, got {lam}")
    ranges = []
    for i in range(poly.dim):
        lo, hi = poly.coordinate_range(i)
        ranges.append((math.floor(lam * lo), math.floor(lam * hi)))

    def bounds(depth, value, k):
        unit = tuple(Fraction(int(j == depth)) for j in range(k))
        return [
            (unit, Fraction(value) / lam, False),
            (tuple(-c for c in unit), -Fraction(value + 1) / lam, True),
        ]

    return _scan(poly, ranges, bounds, guard)


def ceil_vectors(poly: RationalPolytope, s: int, guard: Optional[int] = None):
    """Realizable values of ceil(s * a) over the polytope, via the half-open
    boxes v_i - 1 < s * a_i <= v_i."""
    if s < 1:
        raise DomainError(f"power must be a positive integer, got {s}")
    ranges = []
    for i in range(poly.dim):
        lo, hi = poly.coordinate_range(i)
        ranges.append((math.ceil(s * lo), math.ceil(s * hi)))

    def bounds(depth, value, k):
        unit = tuple(Fraction(int(j == depth)) for j in range(k))
        return [
            (unit, Fraction(value - 1, s), True),
            (tuple(-c for c in unit), -Fraction(value, s), False),
        ]

    return _scan(poly, ranges, bounds, guard)


# ---------------------------------------------------------------------------
# the exact linear program behind every threshold

def min_max_ratio(poly: RationalPolytope, weights: Sequence[int]) -> Fraction:
    """min over the polytope of max_i a_i / weights_i, solved exactly.

    Coordinates with a_i = 0 impose no constraint since weights are positive.
    The polytope must sit inside the nonnegative orthant; reaching 0 (the
    origin belongs to the polytope) is rejected because every threshold
    computed from this program would be infinite there.
    """
    k = poly.dim
    if len(weights) != k:
        raise DomainError("weight vector length must match the dimension")
    if any(w <= 0 for w in weights):
        raise DomainError(f"weights must be positive: {weights!r}")
    for v in poly.vertices:
        if any(c < 0 for c in v):
            raise DomainError("polytope must lie in the nonnegative orthant")

    nvars = k + 1  # (a_1..a_k, t)
    system = []
    for n, c in poly.facets:
        system.append((tuple(Fraction(x) for x in n) + (Fraction(0),), c, False))
    for i, w in enumerate(weights):
        coeffs = [Fraction(0)] * nvars
        coeffs[i] = Fraction(-1)
        coeffs[k] = Fraction(w)
        system.append((tuple(coeffs), Fraction(0), False))

    cur = _tighten(system)
    assert cur is not None
    for j in range(k):
        cur = _eliminate(cur, j)
        assert cur is not None, "threshold program infeasible on a nonempty polytope"

    best = Fraction(0)
    for coeffs, rhs, strict in cur:
        ct = coeffs[k]
        if ct > 0:
            assert not strict, "strict bound from weak data"
            best = max(best, rhs / ct)
    if best == 0:
        raise DomainError(
            "polytope contains the origin; the associated ideal is the unit ideal"
        )
    return best
