"""Shared brute-force oracles, deliberately independent of the package.

Two mechanisms that share no code with the library: exhaustive
coefficient recursion, and a reachable-sums set walk.  Both are slow and
only meant for small instances; their whole value is that a bug in the
library cannot also live here.
"""

from __future__ import annotations

from functools import reduce
from math import gcd


def brute_representable(a: int, elements: tuple[int, ...]) -> bool:
    """Exhaustive coefficient enumeration, first element outermost."""
    if a == 0:
        return True
    if a < 0:
        return False
    first, rest = elements[0], elements[1:]
    if not rest:
        return a % first == 0
    return any(brute_representable(a - k * first, rest) for k in range(a // first + 1))


def reachable_sums(elements: tuple[int, ...], limit: int) -> set[int]:
    """All nonnegative combinations <= limit, grown breadth-first."""
    reached = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for e in elements:
            w = v + e
            if w <= limit and w not in reached:
                reached.add(w)
                frontier.append(w)
    return reached


def brute_frobenius(elements: tuple[int, ...]) -> int:
    """Largest non-representable integer via the reachable-sums walk.

    No bound formula: the walk doubles its horizon until the top a1
    consecutive integers are all reached.  Everything past such a run is
    reachable too (keep adding a1), so the largest unreached value below
    it is the true answer.
    """
    es = sorted(set(elements))
    assert reduce(gcd, es) == 1
    a1 = es[0]
    if a1 == 1:
        return -1
    limit = max(4 * a1, 16)
    while True:
        reached = reachable_sums(tuple(es), limit)
        if all(v in reached for v in range(limit - a1 + 1, limit + 1)):
            break
        limit *= 2
    for v in range(limit, 0, -1):
        if v not in reached:
            return v
    return -1
