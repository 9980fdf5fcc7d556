"""Independent ground truth via a representability sieve.

The sieve marks every representable integer in [0, limit] by repeated
shifted-OR over a Python bigint: adding generator a maps bit i to bit
i + a, and doubling the shift amount closes the set under any multiple
of a in O(log limit) bigint operations per generator.  Nothing here is
shared with the descent solver or the floor-function form, so agreement
between them is meaningful evidence.

Table sizes are capped by Brauer's telescoping bound (scan_upper_bound
below): every integer above it is representable, so a table that long
suffices to read off the Frobenius number and the full gap set.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .basis import Basis
from .errors import InvalidInputError, ResourceLimitError

# A table this size is ~125 MB of bits; anything larger is a mistake, not a query.
DEFAULT_LIMIT_CAP = 10**9


@dataclass(frozen=True)
class RepresentabilityTable:
    """Bit-packed answers for every target in [0, limit]."""

    limit: int
    bits: int

    def __getitem__(self, a: int) -> bool:
        if not 0 <= a <= self.limit:
            raise InvalidInputError(f"target {a} outside table range [0, {self.limit}]")
        return bool(self.bits >> a & 1)

    def gaps(self) -> tuple[int, ...]:
        """All non-representable integers in the table, ascending."""
        hole = ~self.bits & ((1 << (self.limit + 1)) - 1)
        out = []
        while hole:
            low = hole & -hole
            out.append(low.bit_length() - 1)
            hole ^= low
        return tuple(out)


def sieve(basis: Basis, limit: int, *, limit_cap: int = DEFAULT_LIMIT_CAP) -> RepresentabilityTable:
    """Tabulate representability for all targets in [0, limit]."""
    if limit < 0:
        raise InvalidInputError(f"limit must be nonnegative, got {limit}")
    if limit > limit_cap:
        raise ResourceLimitError(f"limit {limit} exceeds cap {limit_cap}")
    mask = (1 << (limit + 1)) - 1
    bits = 1  # 0 is the empty sum
    for a in basis:
        if a > limit:
            continue
        step = a
        while step <= limit:
            bits |= (bits << step) & mask
            step <<= 1
    return RepresentabilityTable(limit=limit, bits=bits)


def scan_upper_bound(basis: Basis) -> int:
    """Brauer's telescoping bound: every integer above it is representable.

    With d_i = gcd of the first i generators, the bound is
    sum(a_i * d_{i-1} // d_i for i >= 2) - sum(a_i).  Each generator can
    only shrink the running gcd, and once it reaches 1 the remaining
    ratios are 1, so for a coprime leading pair this collapses to the
    familiar a1*a2 - a1 - a2.  Unlike that two-generator product, it
    stays valid when a prefix of the basis shares a common factor.
    Returns -1 when 1 is a generator (every positive integer reachable).
    """
    es = basis.elements
    d = es[0]
    total = es[0]
    bound = 0
    for a in es[1:]:
        nd = gcd(d, a)
        bound += a * (d // nd)
        total += a
        d = nd
    return bound - total


def frobenius_oracle(basis: Basis, *, limit_cap: int = DEFAULT_LIMIT_CAP) -> int:
    """Largest non-representable integer, straight from the sieve table.

    Returns -1 when every positive integer is representable (1 in basis).
    """
    upper = scan_upper_bound(basis)
    if upper < 1:
        return -1
    table = sieve(basis, upper, limit_cap=limit_cap)
    hole = ~table.bits & ((1 << (upper + 1)) - 1)
    return hole.bit_length() - 1  # highest zero bit; -1 if none


def gaps(basis: Basis, *, limit_cap: int = DEFAULT_LIMIT_CAP) -> tuple[int, ...]:
    """Every non-representable positive integer, ascending."""
    upper = scan_upper_bound(basis)
    if upper < 1:
        return ()
    return sieve(basis, upper, limit_cap=limit_cap).gaps()


def is_independent(basis: Basis, *, limit_cap: int = DEFAULT_LIMIT_CAP) -> bool:
    """True iff no element is representable over the remaining elements.

    A dependent (redundant) generator never changes the Frobenius number,
    but some classical bounds silently assume it isn't there.
    """
    es = basis.elements
    if es[-1] > limit_cap:
        raise ResourceLimitError(f"largest element {es[-1]} exceeds cap {limit_cap}")
    for i, e in enumerate(es):
        others = es[:i] + es[i + 1 :]
        if len(others) < 2:
            # Two-element bases: dependence would mean one divides the other,
            # impossible with gcd 1 and both > 1 unless the smaller is 1.
            if any(e % o == 0 for o in others):
                return False
            continue
        mask = (1 << (e + 1)) - 1
        bits = 1
        for a in others:
            if a > e:
                continue
            step = a
            while step <= e:
                bits |= (bits << step) & mask
                step <<= 1
        if bits >> e & 1:
            return False
    return True
