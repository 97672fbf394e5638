"""Brute-force characteristic-p oracle for monomial test ideals.

The oracle follows the definition directly: for a prime power q = p^e take
the ceil(lam*q)-th power of the ideal, extract its q-th root (componentwise
floor division of generator exponents), and watch the ascending chain of
results stabilize.  No polytope machinery is used anywhere in this module,
which is what makes the agreement with the Newton-polytope formula a real
cross-check.

Powers of a monomial ideal are generated by the sums of r generators with
multiplicity, so the q-th root of the r-th power can be accumulated directly
from floor((sum of a composition)/q) without materializing the power; the
innermost composition loop is vectorized with numpy since r reaches
lam * p^e_max.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ConsistencyError, DomainError
from .monomial import MonomialIdeal, minimalize, product


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimePower:
    p: int
    e: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")
        if self.e < 1:
            raise DomainError(f"exponent must be positive, got {self.e}")

    @property
    def q(self) -> int:
        return self.p ** self.e


def monomial_power(ideal: MonomialIdeal, r: int) -> MonomialIdeal:
    """r-fold product of the ideal with itself; r = 0 gives the unit ideal."""
    if r < 0:
        raise DomainError(f"power must be nonnegative, got {r}")
    out = MonomialIdeal.unit(ideal.nvars)
    for _ in range(r):
        out = product(out, ideal)
    return out


def bracket_root(ideal: MonomialIdeal, q: int) -> MonomialIdeal:
    """Smallest ideal whose q-th Frobenius power contains the input; for
    monomials this floors every generator exponent by q."""
    if q < 1:
        raise DomainError(f"Frobenius power must be positive, got {q}")
    return MonomialIdeal(
        ideal.nvars,
        minimalize(tuple(x // q for x in g) for g in ideal.gens),
    )


_CHUNK = 1 << 21
_CODE_BITS = 12


def _collect_floors(vals: list[np.ndarray], found: set) -> None:
    """Deduplicate floor vectors; small entries are packed into one int64."""
    nvars = len(vals)
    if nvars * _CODE_BITS <= 60 and all(
        v.size == 0 or 0 <= int(v.min()) and int(v.max()) < (1 << _CODE_BITS)
        for v in vals
    ):
        code = vals[0].copy()
        for d in range(1, nvars):
            code += vals[d] << (_CODE_BITS * d)
        found.update(int(c) for c in np.unique(code))
    else:
        stacked = np.unique(np.stack(vals, axis=1), axis=0)
        found.update(tuple(int(x) for x in row) for row in stacked)


def _decode(found: set, nvars: int) -> set[tuple[int, ...]]:
    mask = (1 << _CODE_BITS) - 1
    out = set()
    for item in found:
        if isinstance(item, tuple):
            out.add(item)
        else:
            out.add(tuple((item >> (_CODE_BITS * d)) & mask for d in range(nvars)))
    return out


def _triangle_floors(base: np.ndarray, rem: int, g0, g1, g2, q: int,
                     found: set) -> None:
    """Floors of base + j*g0 + (rem-c-j)*g1 + c*g2 over the whole triangle
    0 <= c <= rem, 0 <= j <= rem - c, batched into large numpy chunks."""
    nvars = len(base)
    c = 0
    while c <= rem:
        c_end = c
        total = 0
        while c_end <= rem and total + (rem - c_end + 1) <= _CHUNK:
            total += rem - c_end + 1
            c_end += 1
        if c_end == c:  # a single row longer than the chunk: take it alone
            c_end = c + 1
            total = rem - c + 1
        lengths = np.array([rem - cc + 1 for cc in range(c, c_end)], dtype=np.int64)
        starts = np.zeros(len(lengths), dtype=np.int64)
        np.cumsum(lengths[:-1], out=starts[1:])
        row = np.repeat(np.arange(c, c_end, dtype=np.int64), lengths)
        j = np.arange(total, dtype=np.int64) - np.repeat(starts, lengths)
        other = rem - row - j
        vals = [
            (base[d] + j * g0[d] + other * g1[d] + row * g2[d]) // q
            for d in range(nvars)
        ]
        _collect_floors(vals, found)
        c = c_end


def _root_of_power(gens: tuple[tuple[int, ...], ...], r: int, q: int,
                   ) -> tuple[tuple[int, ...], ...]:
    """Minimal generators of the q-th root of the r-th power.

    Equals bracket_root(monomial_power(ideal, r), q): the floors of the
    r-fold generator sums already sweep every minimal generator of the
    power, and dominated sums floor to dominated vectors.
    """
    nvars = len(gens[0])
    if r == 0:
        return ((0,) * nvars,)
    arr = [np.asarray(g, dtype=np.int64) for g in gens]
    found: set = set()
    if len(arr) == 1:
        found.add(tuple(int(x) for x in (r * arr[0]) // q))
        return minimalize(found)
    zero = np.zeros(nvars, dtype=np.int64)
    if len(arr) == 2:
        counts = np.arange(r + 1, dtype=np.int64)
        vals = [
            (counts * arr[0][d] + (r - counts) * arr[1][d]) // q
            for d in range(nvars)
        ]
        _collect_floors(vals, found)
        return minimalize(_decode(found, nvars))

    def rec(idx: int, rem: int, base: np.ndarray):
        if idx <= 2:
            _triangle_floors(base, rem, arr[0], arr[1], arr[2], q, found)
            return
        for c in range(rem + 1):
            rec(idx - 1, rem - c, base + c * arr[idx])

    rec(len(arr) - 1, r, zero)
    return minimalize(_decode(found, nvars))


@dataclass(frozen=True)
class OracleReport:
    tau: MonomialIdeal
    stabilized: bool
    chain: tuple[MonomialIdeal, ...]

    @property
    def chain_lengths(self) -> tuple[int, ...]:
        return tuple(len(step.gens) for step in self.chain)

    def to_json(self) -> dict:
        return {
            "tau": self.tau.to_json(),
            "stabilized": self.stabilized,
            "chain_lengths": list(self.chain_lengths),
        }


def tau_oracle(ideal: MonomialIdeal, lam, p: int, e_max: int = 5) -> OracleReport:
    """Stabilizing union defining the test ideal at coefficient lam.

    Computes J_e = (I^ceil(lam*p^e))^(1/p^e) for e = 1..e_max, verifies the
    chain is ascending, and flags stabilization when the last two steps
    agree.  Stabilization after two equal steps is a heuristic; consumers
    requiring certainty must insist on stabilized=True.
    """
    lam = Fraction(lam)
    if lam <= 0:
        raise DomainError(f"coefficient must be positive, got {lam}")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if e_max < 2:
        raise DomainError(f"need e_max >= 2 to observe stabilization, got {e_max}")

    chain = []
    for e in range(1, e_max + 1):
        q = p ** e
        r = math.ceil(lam * q)
        step = MonomialIdeal(ideal.nvars, _root_of_power(ideal.gens, r, q))
        if chain and not step.contains_ideal(chain[-1]):
            raise ConsistencyError(
                f"Frobenius-root chain not ascending at p={p}, e={e}"
            )
        chain.append(step)
    return OracleReport(
        tau=chain[-1],
        stabilized=chain[-1] == chain[-2],
        chain=tuple(chain),
    )
