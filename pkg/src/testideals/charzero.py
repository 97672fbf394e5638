"""Characteristic-zero front end: multiplier ideals of group-invariant ideals.

Invariant ideals are given by sets of Schur diagrams in one of three flavors
(generic m x n, symmetric n x n, alternating n x n).  Up to integral closure
every such ideal agrees with a sum of products of determinantal or Pfaffian
ideals, obtained by a flavor-specific shape translation; multiplier ideals
and log-canonical thresholds then coincide with the test ideals and
thresholds the positive-characteristic engine computes (the values are
independent of the characteristic).  No new mathematics happens here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import engine
from .contexts import RingContext
from .diagrams import Diagram, derived_skew, derived_symmetric
from .errors import DomainError

GENERIC_GL = "generic_gl"
SYMMETRIC_GL = "symmetric_gl"
SKEW_GL = "skew_gl"

REDUCTION_NOTE = "computed via reduction to large positive characteristic"


@dataclass(frozen=True)
class InvariantIdealSpec:
    """A flavor plus the Schur diagrams generating the invariant ideal.

    Validity is flavor-specific: generic diagrams have at most m parts;
    symmetric ones at most n parts with every part even; alternating ones at
    most n parts with every column length even.
    """

    flavor: str
    n: int
    sigmas: tuple[Diagram, ...]
    m: int | None = None

    def __post_init__(self):
        sigmas = tuple(sorted(set(self.sigmas)))
        object.__setattr__(self, "sigmas", sigmas)
        if not sigmas:
            raise DomainError("an invariant ideal spec needs at least one diagram")
        if self.flavor == GENERIC_GL:
            if self.m is None or not (1 <= self.m <= self.n):
                raise DomainError(
                    f"generic flavor needs 1 <= m <= n, got m={self.m}, n={self.n}"
                )
            for s in sigmas:
                if s.nparts > self.m:
                    raise DomainError(
                        f"diagram {s.parts!r} has more than {self.m} parts"
                    )
        elif self.flavor == SYMMETRIC_GL:
            if self.m is not None or self.n < 1:
                raise DomainError(f"symmetric flavor needs n >= 1, got n={self.n}")
            for s in sigmas:
                if s.nparts > self.n:
                    raise DomainError(
                        f"diagram {s.parts!r} has more than {self.n} parts"
                    )
                if any(p % 2 for p in s.parts):
                    raise DomainError(
                        f"diagram {s.parts!r} has an odd part; symmetric-flavor "
                        "diagrams need all parts even"
                    )
        elif self.flavor == SKEW_GL:
            if self.m is not None or self.n < 2:
                raise DomainError(f"alternating flavor needs n >= 2, got n={self.n}")
            for s in sigmas:
                if s.nparts > self.n:
                    raise DomainError(
                        f"diagram {s.parts!r} has more than {self.n} parts"
                    )
                if any(c % 2 for c in s.transpose().parts):
                    raise DomainError(
                        f"diagram {s.parts!r} has an odd column; alternating-flavor "
                        "diagrams need all column lengths even"
                    )
        else:
            raise DomainError(f"unknown flavor {self.flavor!r}")

    def to_json(self) -> dict:
        out = {
            "flavor": self.flavor,
            "n": self.n,
            "sigmas": [s.to_json() for s in self.sigmas],
        }
        if self.flavor == GENERIC_GL:
            out["m"] = self.m
        return out

    @classmethod
    def from_json(cls, data) -> "InvariantIdealSpec":
        if not isinstance(data, dict) or "flavor" not in data:
            raise DomainError(f"flavor JSON needs a 'flavor' field: {data!r}")
        try:
            sigmas = tuple(Diagram.from_json(s) for s in data.get("sigmas", []))
            if data["flavor"] == GENERIC_GL:
                return cls(GENERIC_GL, n=int(data["n"]), m=int(data["m"]),
                           sigmas=sigmas)
            return cls(data["flavor"], n=int(data["n"]), sigmas=sigmas)
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"bad flavor JSON {data!r}: {exc}") from None


def translate(spec: InvariantIdealSpec) -> engine.ProductIdealSpec:
    """Shape translation onto the determinantal/Pfaffian engine.

    generic: transpose each diagram; symmetric: keep every second column
    length; alternating: halve every column length.
    """
    if spec.flavor == GENERIC_GL:
        context = RingContext.generic(spec.m, spec.n)
        shapes = tuple(s.transpose() for s in spec.sigmas)
    elif spec.flavor == SYMMETRIC_GL:
        context = RingContext.symmetric(spec.n)
        shapes = tuple(derived_symmetric(s) for s in spec.sigmas)
    else:
        context = RingContext.skew_symmetric(spec.n)
        shapes = tuple(derived_skew(s) for s in spec.sigmas)
    return engine.ProductIdealSpec(context, shapes)


def multiplier_ideal(spec: InvariantIdealSpec, lam,
                     guard=None) -> engine.IdealPresentation:
    """Multiplier ideal with coefficient lam; identical formula to the test
    ideal of the translated spec."""
    return engine.test_ideal(translate(spec), Fraction(lam), guard=guard)


def lct(spec: InvariantIdealSpec) -> Fraction:
    """Log-canonical threshold; equals the translated spec's threshold."""
    return engine.fpt(translate(spec))
