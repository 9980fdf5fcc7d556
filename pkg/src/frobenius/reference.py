"""Bundled reference instances with their published answers.

The table1 subcommand and the regression suite recompute every row and
compare against both the expected value and the independent sieve, so a
wrong entry here cannot go unnoticed.
"""

from __future__ import annotations

REFERENCE_CASES: tuple[tuple[tuple[int, ...], int], ...] = (
    ((7, 11, 13), 30),
    ((53, 71, 91), 899),
    ((322, 654, 765), 27971),
    ((123, 1234, 12345), 71459),
    ((151, 157, 251, 711), 3019),
    ((151, 157, 251, 711, 912), 3019),
    (
        (
            101, 109, 113, 119, 121, 131, 139, 149, 151, 161,
            163, 167, 169, 187, 191, 214, 219, 238, 276, 324,
            345, 346, 349, 387, 421, 427, 444, 453, 463, 525,
            530, 555, 579, 580, 625, 711, 719, 737, 752, 787,
            814, 834, 856, 878, 899, 915, 937, 978, 989,
        ),
        426,
    ),
)
