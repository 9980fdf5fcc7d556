#!/usr/bin/env python3
"""Recompute the bundled reference instances with all three algorithms.

Prints one row per instance with each algorithm's answer and wall time,
so a regression in any solver (or in the reference data) is obvious.

    python3 scripts/reproduce_table1.py
"""

from __future__ import annotations

import time

from frobenius import (
    Basis,
    REFERENCE_CASES,
    frobenius_descent,
    frobenius_oracle,
    frobenius_sequential,
)


def timed(fn, *args):
    t0 = time.perf_counter()
    value = fn(*args)
    return value, (time.perf_counter() - t0) * 1000.0


def main() -> int:
    print(f"{'row':<4} {'n':<4} {'expected':<9} {'descent':<16} {'sequential':<16} {'oracle':<16} ok")
    all_ok = True
    for idx, (elements, expected) in enumerate(REFERENCE_CASES, start=1):
        basis = Basis(elements)
        d, dt = timed(lambda b: frobenius_descent(b).value, basis)
        s, st = timed(lambda b: frobenius_sequential(b).value, basis)
        o, ot = timed(frobenius_oracle, basis)
        ok = d == s == o == expected
        all_ok = all_ok and ok
        print(
            f"{idx:<4} {len(elements):<4} {expected:<9} "
            f"{d:>7} {dt:7.1f}ms {s:>7} {st:7.1f}ms {o:>7} {ot:7.1f}ms {'yes' if ok else 'NO'}"
        )
    print("all rows reproduced" if all_ok else "MISMATCH: see rows above")
    return 0 if all_ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
