"""Frobenius number solvers and the algorithm dispatcher.

frobenius_descent scans candidates downward from scan_upper_bound (the
telescoping gcd bound, a1*a2 - a1 - a2 when the two smallest generators
are coprime) and returns the first target the membership test rejects.
If the whole scan range [a1 + 1, bound] is representable, the answer is
a1 - 1: integers in [1, a1 - 1] are never representable (too small), and
representability of a1 + 1 .. a1 + a1 extends upward by adding copies
of a1.

frobenius() picks the algorithm and wraps the answer in a FrobeniusResult.
Two-element bases short-circuit to the closed form a1*a2 - a1 - a2, and a
basis containing 1 short-circuits to -1, whatever algorithm was asked for.
"""

from __future__ import annotations

from dataclasses import dataclass

from .basis import Basis
from .errors import InvalidInputError
from .oracle import frobenius_oracle, scan_upper_bound
from .representability import Memo, has_rep
from .sequential import delta_scan

ALGORITHM_TAGS = ("paper-descent", "oracle", "sequential", "closed-form")


@dataclass(frozen=True)
class FrobeniusResult:
    """Answer plus enough context to audit how it was produced.

    value is -1 exactly when 1 is a generator; otherwise it is the largest
    integer with no nonnegative representation.  candidates_scanned counts
    membership queries the algorithm spent (0 for closed forms).
    """

    value: int
    upper_bound_used: int
    candidates_scanned: int
    algorithm: str

    def __post_init__(self) -> None:
        if self.value < -1:
            raise InvalidInputError(f"value must be >= -1, got {self.value}")
        if self.value > self.upper_bound_used:
            raise InvalidInputError(
                f"value {self.value} exceeds its own upper bound {self.upper_bound_used}"
            )
        if self.candidates_scanned < 0:
            raise InvalidInputError("candidates_scanned must be nonnegative")
        if self.algorithm not in ALGORITHM_TAGS:
            raise InvalidInputError(f"unknown algorithm tag {self.algorithm!r}")


def frobenius_descent(basis: Basis, *, shared_memo: bool = True) -> FrobeniusResult:
    """Downward scan from scan_upper_bound using the membership test.

    shared_memo reuses membership subproblems across candidates; turning it
    off reverts to an independent test per candidate (same answers, slower).
    """
    upper = scan_upper_bound(basis)
    if upper < 1:
        return FrobeniusResult(-1, upper, 0, "paper-descent")
    a1 = basis.elements[0]
    memo: Memo | None = {} if shared_memo else None
    scanned = 0
    for a in range(upper, a1, -1):
        scanned += 1
        if not has_rep(a, basis, memo if shared_memo else {}):
            return FrobeniusResult(a, upper, scanned, "paper-descent")
    return FrobeniusResult(a1 - 1, upper, scanned, "paper-descent")


def frobenius_sequential(basis: Basis) -> FrobeniusResult:
    """Solve via the floor-function indicator scan (see the sequential module)."""
    upper = scan_upper_bound(basis)
    if upper < 1:
        return FrobeniusResult(-1, upper, 0, "sequential")
    value, scanned = delta_scan(basis)
    return FrobeniusResult(value, upper, scanned, "sequential")


def frobenius(basis: Basis, algorithm: str = "paper") -> FrobeniusResult:
    """Frobenius number of a valid basis, by the named algorithm.

    algorithm is one of "paper" (descent scan, the default), "oracle"
    (sieve table), or "sequential" (floor-function indicator scan).
    """
    if algorithm not in ("paper", "oracle", "sequential"):
        raise InvalidInputError(f"unknown algorithm {algorithm!r}")
    if basis.contains_one:
        return FrobeniusResult(-1, -1, 0, "closed-form")
    upper = scan_upper_bound(basis)
    if basis.n == 2:
        return FrobeniusResult(upper, upper, 0, "closed-form")
    if algorithm == "oracle":
        value = frobenius_oracle(basis)
        return FrobeniusResult(value, upper, upper - value + 1, "oracle")
    if algorithm == "sequential":
        return frobenius_sequential(basis)
    return frobenius_descent(basis)
