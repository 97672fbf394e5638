"""Young diagram combinatorics.

A diagram is a weakly decreasing tuple of positive integers.  The gamma
counts gamma(t) = sum_i max(0, parts[i] - t + 1) (the number of boxes lying
in columns >= t) drive every symbolic-power and threshold computation in
this package, so they live here together with transpose, concatenation,
containment and the two derived diagrams used to translate symmetric and
alternating shape data into determinantal shape data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError


@dataclass(frozen=True, order=True)
class Diagram:
    """Weakly decreasing tuple of positive integers; () is the empty diagram."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise DomainError(f"diagram parts must be positive: {parts!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"diagram parts must be weakly decreasing: {parts!r}")

    def __repr__(self):
        return f"Diagram{self.parts!r}"

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    @property
    def nparts(self) -> int:
        return len(self.parts)

    @property
    def height(self) -> int:
        """Largest entry, i.e. the size of the biggest factor the shape encodes."""
        return self.parts[0] if self.parts else 0

    @property
    def size(self) -> int:
        """Total box count; equals gamma(1)."""
        return sum(self.parts)

    def gamma(self, t: int) -> int:
        """Number of boxes in columns >= t: sum_i max(0, parts[i] - t + 1)."""
        if t < 1:
            raise DomainError(f"gamma index must be >= 1, got {t}")
        return sum(p - t + 1 for p in self.parts if p >= t)

    def gamma_vector(self, k: int) -> tuple[int, ...]:
        """(gamma(1), ..., gamma(k)); weakly decreasing, first entry = box count."""
        if k < 1:
            raise DomainError(f"gamma vector length must be >= 1, got {k}")
        return tuple(self.gamma(t) for t in range(1, k + 1))

    def transpose(self) -> "Diagram":
        """Diagram of column lengths; an involution."""
        if not self.parts:
            return Diagram()
        cols = tuple(
            sum(1 for p in self.parts if p >= i) for i in range(1, self.parts[0] + 1)
        )
        return Diagram(cols)

    def concat(self, other: "Diagram") -> "Diagram":
        """Merge the parts of both diagrams, re-sorted decreasingly.

        gamma(t) is additive under concatenation for every t.
        """
        return Diagram(tuple(sorted(self.parts + other.parts, reverse=True)))

    def contains(self, other: "Diagram") -> bool:
        """True iff `other` fits inside this diagram entrywise."""
        if other.nparts > self.nparts:
            return False
        return all(o <= s for o, s in zip(other.parts, self.parts))

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, data) -> "Diagram":
        if not isinstance(data, (list, tuple)):
            raise DomainError(f"diagram JSON must be an array of integers: {data!r}")
        return cls(tuple(data))


def derived_symmetric(sigma: Diagram) -> Diagram:
    """Diagram with i-th entry the (2i)-th column length of `sigma`.

    Only defined for diagrams whose parts are all even; this is the shape map
    under which ideals of minors of a symmetric matrix acquire determinantal
    shape data (the row diagram (2,2,...,2) with t rows maps to (t)).
    """
    if any(p % 2 for p in sigma.parts):
        raise DomainError(f"all parts must be even: {sigma.parts!r}")
    cols = sigma.transpose().parts
    return Diagram(tuple(cols[i] for i in range(1, len(cols), 2)))


def derived_skew(sigma: Diagram) -> Diagram:
    """Diagram with i-th entry half the i-th column length of `sigma`.

    Only defined for diagrams whose column lengths are all even; this is the
    shape map for Pfaffian ideals (the column diagram (1,...,1) with 2t rows
    maps to (t)).
    """
    cols = sigma.transpose().parts
    if any(c % 2 for c in cols):
        raise DomainError(f"all column lengths must be even: {sigma.parts!r}")
    return Diagram(tuple(c // 2 for c in cols))


def iter_diagrams(max_boxes: int, max_height: int | None = None) -> Iterator[Diagram]:
    """All diagrams with at most `max_boxes` boxes (entries <= max_height if set).

    Includes the empty diagram.  Used by exhaustive invariant checks.
    """
    yield Diagram()
    for total in range(1, max_boxes + 1):
        cap = total if max_height is None else min(total, max_height)
        yield from (Diagram(p) for p in _partitions(total, cap))


def _partitions(total: int, cap: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(min(total, cap), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def diagrams_from_json(data) -> tuple[Diagram, ...]:
    if not isinstance(data, (list, tuple)):
        raise DomainError(f"expected an array of diagrams: {data!r}")
    return tuple(Diagram.from_json(d) for d in data)
