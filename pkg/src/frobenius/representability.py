"""Membership tests: is a nonnegative integer a sum of basis elements?

The core test has_rep(a, basis) strips multiples of the largest element
and recurses on the shorter prefix.  The two-element base case is solved
in O(log) time: a has a representation over {b1 < b2} iff some
m in [0, a // b2] satisfies b1 | (a - m * b2), and after dividing out
g = gcd(b1, b2) the smallest such m is (a/g) * inv(b2/g) mod (b1/g).

has_rep works for any two-or-more element basis prefix even when the
prefix gcd exceeds 1 (the prefix of a coprime basis usually isn't
coprime), which the recursion relies on.
"""

from __future__ import annotations

from math import gcd

from .basis import Basis, RepresentationWitness
from .errors import InvalidInputError

Memo = dict[tuple[int, int], bool]


def has_rep_two(a: int, b1: int, b2: int) -> bool:
    """True iff a = x*b1 + y*b2 has a solution with x, y >= 0.

    Requires 0 < b1 < b2; a must be nonnegative.  gcd(b1, b2) may exceed 1.
    """
    if a < 0:
        raise InvalidInputError(f"target must be nonnegative, got {a}")
    if not 0 < b1 < b2:
        raise InvalidInputError(f"need 0 < b1 < b2, got {b1}, {b2}")
    g = gcd(b1, b2)
    if a % g:
        return False
    a, b1, b2 = a // g, b1 // g, b2 // g
    if b1 == 1:
        return True
    # Smallest m >= 0 with b1 | (a - m*b2); representable iff m*b2 still fits.
    m = (a * pow(b2, -1, b1)) % b1
    return m * b2 <= a


def has_rep(a: int, basis: Basis, memo: Memo | None = None) -> bool:
    """True iff a is a nonnegative integer combination of the basis elements.

    Pass a shared memo dict to reuse subproblem answers across calls with
    the same basis (keys are (target, prefix length)).
    """
    if a < 0:
        raise InvalidInputError(f"target must be nonnegative, got {a}")
    if memo is None:
        memo = {}
    return _has_rep(a, basis.elements, len(basis.elements), memo)


def _has_rep(a: int, elements: tuple[int, ...], j: int, memo: Memo) -> bool:
    if j == 2:
        return has_rep_two(a, elements[0], elements[1])
    key = (a, j)
    cached = memo.get(key)
    if cached is not None:
        return cached
    top = elements[j - 1]
    result = False
    for k in range(a // top + 1):
        if _has_rep(a - k * top, elements, j - 1, memo):
            result = True
            break
    memo[key] = result
    return result


def find_witness(a: int, basis: Basis) -> RepresentationWitness | None:
    """Coefficients for one representation of a, or None if there is none.

    Greedy on the largest element first, mirroring the membership recursion,
    so it terminates whenever has_rep says True.
    """
    if a < 0:
        raise InvalidInputError(f"target must be nonnegative, got {a}")
    coeffs = _witness_coeffs(a, basis.elements)
    if coeffs is None:
        return None
    return RepresentationWitness(basis=basis, coefficients=tuple(coeffs), target=a)


def _witness_coeffs(a: int, elements: tuple[int, ...]) -> list[int] | None:
    if len(elements) == 2:
        b1, b2 = elements
        g = gcd(b1, b2)
        if a % g:
            return None
        ar, b1r, b2r = a // g, b1 // g, b2 // g
        m = 0 if b1r == 1 else (ar * pow(b2r, -1, b1r)) % b1r
        if m * b2r > ar:
            return None
        return [(ar - m * b2r) // b1r, m]
    top = elements[-1]
    for k in range(a // top + 1):
        rest = _witness_coeffs(a - k * top, elements[:-1])
        if rest is not None:
            return rest + [k]
    return None
