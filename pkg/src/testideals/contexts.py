"""The three determinantal ring contexts.

A context fixes a chain of prime ideals indexed 1..k together with their
heights: minors of a generic m x n matrix (k = m), minors of a symmetric
n x n matrix (k = n), or Pfaffians of a skew-symmetric n x n matrix
(k = floor(n/2), index t standing for the 2t-Pfaffians).  Products of
minors/Pfaffians are represented purely by their shapes: a product of shape
alpha lies in the s-th symbolic power of the t-th prime exactly when
gamma_t(alpha) >= s, which makes the shape a complete invariant for every
membership question answered in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .diagrams import Diagram
from .errors import DomainError

GENERIC = "generic"
SYMMETRIC = "symmetric"
SKEW = "skew_symmetric"


@dataclass(frozen=True, order=True)
class RingContext:
    kind: str
    n: int
    m: int | None = None

    def __post_init__(self):
        if self.kind == GENERIC:
            if self.m is None or not (1 <= self.m <= self.n):
                raise DomainError(
                    f"generic context needs 1 <= m <= n, got m={self.m}, n={self.n}"
                )
        elif self.kind == SYMMETRIC:
            if self.m is not None or self.n < 1:
                raise DomainError(f"symmetric context needs n >= 1, got n={self.n}")
        elif self.kind == SKEW:
            if self.m is not None or self.n < 2:
                raise DomainError(
                    f"skew-symmetric context needs n >= 2, got n={self.n}"
                )
        else:
            raise DomainError(f"unknown context kind {self.kind!r}")

    @classmethod
    def generic(cls, m: int, n: int) -> "RingContext":
        return cls(GENERIC, n=n, m=m)

    @classmethod
    def symmetric(cls, n: int) -> "RingContext":
        return cls(SYMMETRIC, n=n)

    @classmethod
    def skew_symmetric(cls, n: int) -> "RingContext":
        return cls(SKEW, n=n)

    @property
    def k(self) -> int:
        """Length of the prime chain."""
        if self.kind == GENERIC:
            return self.m
        if self.kind == SYMMETRIC:
            return self.n
        return self.n // 2

    @property
    def nvariables(self) -> int:
        """Dimension of the ambient polynomial ring."""
        if self.kind == GENERIC:
            return self.m * self.n
        if self.kind == SYMMETRIC:
            return self.n * (self.n + 1) // 2
        return self.n * (self.n - 1) // 2

    def to_json(self) -> dict:
        if self.kind == GENERIC:
            return {"kind": GENERIC, "m": self.m, "n": self.n}
        return {"kind": self.kind, "n": self.n}

    @classmethod
    def from_json(cls, data) -> "RingContext":
        if not isinstance(data, dict) or "kind" not in data:
            raise DomainError(f"context JSON needs a 'kind' field: {data!r}")
        kind = data["kind"]
        try:
            if kind == GENERIC:
                return cls.generic(int(data["m"]), int(data["n"]))
            if kind in (SYMMETRIC, SKEW):
                return cls(kind, n=int(data["n"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"bad context JSON {data!r}: {exc}") from None
        raise DomainError(f"unknown context kind {kind!r}")


def heights(context: RingContext) -> tuple[int, ...]:
    """Heights of the chain primes, strictly decreasing in the index.

    generic:        (m-i+1)(n-i+1)
    symmetric:      binom(n-i+2, 2)
    skew-symmetric: (n-2i+2)(n-2i+1)/2, always an integer
    """
    if context.kind == GENERIC:
        m, n = context.m, context.n
        return tuple((m - i + 1) * (n - i + 1) for i in range(1, m + 1))
    if context.kind == SYMMETRIC:
        n = context.n
        return tuple(comb(n - i + 2, 2) for i in range(1, n + 1))
    n = context.n
    return tuple(
        (n - 2 * i + 2) * (n - 2 * i + 1) // 2 for i in range(1, n // 2 + 1)
    )


def symbolic_membership(context: RingContext, alpha: Diagram, t: int, s: int) -> bool:
    """Does a product of minors/Pfaffians of shape `alpha` lie in the s-th
    symbolic power of the t-th chain prime?  Holds iff gamma_t(alpha) >= s."""
    k = context.k
    if not 1 <= t <= k:
        raise DomainError(f"prime index {t} outside 1..{k}")
    if alpha.height > k:
        raise DomainError(
            f"shape {alpha.parts!r} too tall for a context with {k} primes"
        )
    if s < 0:
        raise DomainError(f"symbolic exponent must be nonnegative, got {s}")
    return alpha.gamma(t) >= s


def witness_shape(context: RingContext) -> Diagram:
    """The shape whose gamma vector reproduces the height vector exactly.

    These are the shapes of the distinguished products of principal minors /
    Pfaffians: gamma_t(witness) = heights(context)[t-1] for every t.
    """
    if context.kind == GENERIC:
        m, n = context.m, context.n
        parts = [m] * (n - m + 1)
        for v in range(m - 1, 0, -1):
            parts += [v, v]
        return Diagram(tuple(parts))
    if context.kind == SYMMETRIC:
        return Diagram(tuple(range(context.n, 0, -1)))
    n = context.n
    if n % 2 == 0:
        parts = [n // 2]
        top = n // 2 - 1
    else:
        parts = [(n - 1) // 2] * 3
        top = (n - 1) // 2 - 1
    for v in range(top, 0, -1):
        parts += [v] * 4
    return Diagram(tuple(parts))
