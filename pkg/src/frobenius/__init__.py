"""Exact Frobenius numbers for coprime integer bases.

Three independent ways to the same answer: a descending scan driven by a
recursive membership test, a bit-packed sieve table, and a floor-function
indicator form whose telescoping sum picks out the largest gap.  Closed
forms cover two-generator, arithmetic-progression, and Fibonacci-triple
bases, and four classical upper bounds are provided with their vacuity
conditions.  All arithmetic is exact (int and fractions.Fraction); the
only approximate quantity anywhere is the square root inside one bound,
replaced by a one-sided rational approximation.
"""

from .basis import Basis, RepresentationWitness, gcd_all, normalize_basis
from .bounds import (
    BOUND_NAMES,
    BoundReport,
    beck_vacuous,
    bound_beck,
    bound_erdos_graham,
    bound_report,
    bound_selmer,
    bound_vitek,
    chain_bounds,
    selmer_vacuous,
)
from .closed_forms import (
    FibonacciTripleParams,
    fibonacci,
    fibonacci_triple_elements,
    frobenius_arithmetic,
    frobenius_fibonacci_triple,
    frobenius_two,
)
from .errors import (
    ArityError,
    FrobeniusError,
    InvalidElementError,
    InvalidInputError,
    NonCoprimeError,
    OutOfEnvelopeError,
    ResourceLimitError,
)
from .oracle import (
    DEFAULT_LIMIT_CAP,
    RepresentabilityTable,
    frobenius_oracle,
    gaps,
    is_independent,
    scan_upper_bound,
    sieve,
)
from .randgen import LCG_INCREMENT, LCG_MULTIPLIER, Lcg, random_bases, random_basis
from .reference import REFERENCE_CASES
from .representability import find_witness, has_rep, has_rep_two
from .sequential import (
    SequentialTrace,
    delta,
    delta_scan,
    f_indicator,
    h_general,
    h_is_zero,
    h_two,
    n_indicator,
    sequential_trace,
)
from .solver import (
    ALGORITHM_TAGS,
    FrobeniusResult,
    frobenius,
    frobenius_descent,
    frobenius_sequential,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHM_TAGS",
    "ArityError",
    "BOUND_NAMES",
    "Basis",
    "BoundReport",
    "DEFAULT_LIMIT_CAP",
    "FibonacciTripleParams",
    "FrobeniusError",
    "FrobeniusResult",
    "InvalidElementError",
    "InvalidInputError",
    "LCG_INCREMENT",
    "LCG_MULTIPLIER",
    "Lcg",
    "NonCoprimeError",
    "OutOfEnvelopeError",
    "REFERENCE_CASES",
    "RepresentabilityTable",
    "RepresentationWitness",
    "ResourceLimitError",
    "SequentialTrace",
    "beck_vacuous",
    "bound_beck",
    "bound_erdos_graham",
    "bound_report",
    "bound_selmer",
    "bound_vitek",
    "chain_bounds",
    "delta",
    "delta_scan",
    "f_indicator",
    "fibonacci",
    "fibonacci_triple_elements",
    "find_witness",
    "frobenius",
    "frobenius_arithmetic",
    "frobenius_descent",
    "frobenius_fibonacci_triple",
    "frobenius_oracle",
    "frobenius_sequential",
    "frobenius_two",
    "gaps",
    "gcd_all",
    "h_general",
    "h_is_zero",
    "h_two",
    "has_rep",
    "has_rep_two",
    "is_independent",
    "n_indicator",
    "normalize_basis",
    "random_bases",
    "random_basis",
    "scan_upper_bound",
    "selmer_vacuous",
    "sequential_trace",
    "sieve",
    "__version__",
]
