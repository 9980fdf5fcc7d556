"""Closed-form Frobenius numbers for structured bases.

Three families admit direct formulas: two coprime generators, arithmetic
progressions, and Fibonacci triples {F_i, F_{i+2}, F_{i+k}}.  Each function
validates that its input really is in the family and raises otherwise;
the Fibonacci formula additionally refuses inputs on which its second
branch would be used, because that branch does not reproduce sieve values
(see OutOfEnvelopeError).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InvalidInputError, NonCoprimeError, OutOfEnvelopeError


def fibonacci(n: int) -> int:
    """n-th Fibonacci number with F_1 = F_2 = 1."""
    if n < 1:
        raise InvalidInputError(f"Fibonacci index must be >= 1, got {n}")
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def frobenius_two(a: int, b: int) -> int:
    """a*b - a - b for coprime 2 <= a < b."""
    if not 2 <= a < b:
        raise InvalidInputError(f"need 2 <= a < b, got {a}, {b}")
    if gcd(a, b) != 1:
        raise NonCoprimeError(f"gcd({a}, {b}) = {gcd(a, b)}, must be 1")
    return a * b - a - b


def frobenius_arithmetic(a: int, d: int, k: int) -> int:
    """Frobenius number of the progression {a, a+d, ..., a+k*d}.

    Requires a >= 2, d >= 1, k >= 1, gcd(a, d) = 1.  The value is
    ((a - 2) // k) * a + (a - 1) * d.
    """
    if a < 2:
        raise InvalidInputError(f"first term must be >= 2, got {a}")
    if d < 1 or k < 1:
        raise InvalidInputError(f"need step >= 1 and count >= 1, got d={d}, k={k}")
    if gcd(a, d) != 1:
        raise NonCoprimeError(f"gcd({a}, {d}) = {gcd(a, d)}, must be 1")
    return ((a - 2) // k) * a + (a - 1) * d


@dataclass(frozen=True)
class FibonacciTripleParams:
    """Indices selecting the basis {F_i, F_{i+2}, F_{i+k}}.

    literal_r switches the auxiliary quotient to the degenerate
    (F_i - 1) // F_i variant, kept only so the two can be compared; it is
    not used for answers (for i = 4, k = 3 it gives 13 where the true
    value is 10).
    """

    i: int
    k: int
    literal_r: bool = False

    def __post_init__(self) -> None:
        if self.i < 3 or self.k < 3:
            raise InvalidInputError(
                f"need i >= 3 and k >= 3, got i={self.i}, k={self.k}"
            )


def fibonacci_triple_elements(params: FibonacciTripleParams) -> tuple[int, int, int]:
    """The actual generators (F_i, F_{i+2}, F_{i+k})."""
    return (
        fibonacci(params.i),
        fibonacci(params.i + 2),
        fibonacci(params.i + params.k),
    )


def frobenius_fibonacci_triple(params: FibonacciTripleParams) -> int:
    """Closed form for {F_i, F_{i+2}, F_{i+k}} on its verified branch.

    With r = (F_i - 1) // F_k, the branch condition
    r == 0 or F_{k-2} * F_i < (F_i - r*F_k) * F_{i+2} selects the value
    (F_i - 1) * F_{i+2} - F_i * (r * F_{k-2} + 1), which matches the sieve
    on every tested grid point.  Inputs selecting the other branch raise
    OutOfEnvelopeError: the printed value for that branch disagrees with
    the sieve everywhere it was checked, so returning it would be wrong.
    """
    fi = fibonacci(params.i)
    fi2 = fibonacci(params.i + 2)
    fk = fibonacci(params.k)
    fk2 = fibonacci(params.k - 2)
    r = (fi - 1) // (fi if params.literal_r else fk)
    if r == 0 or fk2 * fi < (fi - r * fk) * fi2:
        return (fi - 1) * fi2 - fi * (r * fk2 + 1)
    raise OutOfEnvelopeError(
        f"i={params.i}, k={params.k} selects the unverified branch; "
        "use a sieve or descent solver for this basis"
    )
