"""Closed-form counts of random walk labelings and related exact identities.

Every routine evaluates its published formula with exact arithmetic.  Sums
over k update their binomial factors incrementally (multiply, then exact
integer divide), which keeps sweeps to n = 1000 fast; the per-term values
are identical to evaluating each binomial from scratch, and the test suite
checks that against naive evaluation.  Formulas that produce integer
counts go through a final integrality assertion before returning int, so a
transcription slip in an index surfaces immediately instead of silently.
"""

from __future__ import annotations

import threading
from enum import Enum
from fractions import Fraction
from typing import Callable, Union

from .combinat import as_integer, binomial, catalan, factorial

__all__ = [
    "FormulaId",
    "a087547_bala_factorial",
    "a087547_bala_product",
    "a087547_from_recursion",
    "a087547_from_sum",
    "a087923",
    "a182525",
    "bala_identity_lhs",
    "bala_identity_rhs",
    "complete_labelings",
    "cycle_labelings",
    "evaluate",
    "grid2_labelings",
    "king2_first_column_starts",
    "king2_labelings",
    "path_labelings",
]


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def complete_labelings(n: int) -> int:
    """L(K_n) = n!: every vertex order is walkable on a complete graph."""
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return factorial(n)


def path_labelings(n: int) -> int:
    """L(P_n) = 2^(n-1)."""
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return 1 << (n - 1)


def cycle_labelings(n: int) -> int:
    """L(C_n) = n * 2^(n-2)."""
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return n << (n - 2)


def king2_labelings(n: int) -> int:
    """L of the 2 x n king graph: 2^(n-1) * (n+1)! * Catalan(n)."""
    _require(n >= 1, f"king board needs n >= 1, got {n}")
    return (1 << (n - 1)) * factorial(n + 1) * catalan(n)


def king2_first_column_starts(n: int) -> int:
    """Walk labelings of the 2 x n king graph that start in the first
    column: (2n)! / n!."""
    _require(n >= 1, f"king board needs n >= 1, got {n}")
    return factorial(2 * n) // factorial(n)


def grid2_labelings(n: int) -> int:
    """L of the 2 x n grid graph:

        2^(n-1) (n-1)! sum_k (n C(2n-2, 2k) + C(2n-1, 2k)) / C(n-1, k)

    The sum is rational term by term; the total must be integral.
    """
    _require(n >= 1, f"grid board needs n >= 1, got {n}")
    b_even = 1  # C(2(n-1), 2k)
    b_odd = 1  # C(2n-1, 2k)
    b_row = 1  # C(n-1, k)
    total = Fraction(0)
    for k in range(n):
        if k:
            j = 2 * (k - 1)
            b_even = b_even * (2 * n - 2 - j) * (2 * n - 3 - j) // ((j + 1) * (j + 2))
            b_odd = b_odd * (2 * n - 1 - j) * (2 * n - 2 - j) // ((j + 1) * (j + 2))
            b_row = b_row * (n - k) // k
        total += Fraction(n * b_even + b_odd, b_row)
    value = (1 << (n - 1)) * factorial(n - 1) * total
    return as_integer(value, f"2x{n} grid labeling count")


def a087923(n: int) -> int:
    """A087923(n) = 2^n (n-1)! sum_k C(2n-2, 2k) (2(k+1)(n-k) - 1)
    / (C(n-1, k) (2k+1)); counts 2 x n arrangements of 1..2n with exactly
    one local maximum, and equals grid2_labelings(n)."""
    _require(n >= 1, f"a087923 needs n >= 1, got {n}")
    b_even = 1  # C(2(n-1), 2k)
    b_row = 1  # C(n-1, k)
    total = Fraction(0)
    for k in range(n):
        if k:
            j = 2 * (k - 1)
            b_even = b_even * (2 * n - 2 - j) * (2 * n - 3 - j) // ((j + 1) * (j + 2))
            b_row = b_row * (n - k) // k
        total += Fraction(b_even * (2 * (k + 1) * (n - k) - 1), b_row * (2 * k + 1))
    value = (1 << n) * factorial(n - 1) * total
    return as_integer(value, f"a087923({n})")


def a087547_from_sum(n: int) -> int:
    """A087547(n) = (n-1)! sum_k C(2n-1, 2k) / C(n-1, k)."""
    _require(n >= 1, f"a087547 needs n >= 1, got {n}")
    b_odd = 1  # C(2n-1, 2k)
    b_row = 1  # C(n-1, k)
    total = Fraction(0)
    for k in range(n):
        if k:
            j = 2 * (k - 1)
            b_odd = b_odd * (2 * n - 1 - j) * (2 * n - 2 - j) // ((j + 1) * (j + 2))
            b_row = b_row * (n - k) // k
        total += Fraction(b_odd, b_row)
    return as_integer(factorial(n - 1) * total, f"a087547({n})")


def a087547_from_recursion(n: int) -> int:
    """A087547(n) by the recursion a_n = (2n-1) a_(n-1) + (n-1)!, a_1 = 1."""
    _require(n >= 1, f"a087547 needs n >= 1, got {n}")
    a = 1
    fact = 1
    for i in range(2, n + 1):
        fact *= i - 1
        a = (2 * i - 1) * a + fact
    return a


# Shared by bala_identity_rhs and a087547_bala_product, which both carry the
# prefix sum sum_{k<n} 2^k / ((2k+1) C(2k, k)); the partner sides of their
# respective identities are evaluated independently.
_prefix_lock = threading.Lock()
_prefix_sums: list[Fraction] = [Fraction(0)]
_prefix_terms: list[Fraction] = [Fraction(1)]


def _inverse_central_prefix(n: int) -> Fraction:
    if len(_prefix_sums) <= n:
        with _prefix_lock:
            while len(_prefix_sums) <= n:
                k = len(_prefix_sums) - 1
                _prefix_sums.append(_prefix_sums[-1] + _prefix_terms[-1])
                _prefix_terms.append(_prefix_terms[-1] * Fraction(k + 1, 2 * k + 3))
    return _prefix_sums[n]


def bala_identity_lhs(n: int) -> Fraction:
    """sum_{k<n} 2^k C(n+k, k) / ((2k+1) C(2k, k)), exactly."""
    _require(n >= 1, f"identity needs n >= 1, got {n}")
    term = Fraction(1)
    total = Fraction(0)
    for k in range(n):
        if k:
            term *= Fraction(n + k, 2 * k + 1)
        total += term
    return total


def bala_identity_rhs(n: int) -> Fraction:
    """C(2n, n) / 2^n  *  sum_{k<n} 2^k / ((2k+1) C(2k, k)), exactly."""
    _require(n >= 1, f"identity needs n >= 1, got {n}")
    return Fraction(binomial(2 * n, n), 1 << n) * _inverse_central_prefix(n)


def a087547_bala_product(n: int) -> Fraction:
    """Bala's product form of A087547:
    (2n)! / (n! 2^n) * sum_{k<n} 2^k (k!)^2 / (2k+1)!."""
    _require(n >= 1, f"a087547 needs n >= 1, got {n}")
    prefactor = Fraction(factorial(2 * n), factorial(n) * (1 << n))
    return prefactor * _inverse_central_prefix(n)


def a087547_bala_factorial(n: int) -> Fraction:
    """Bala's factorial-ratio form of A087547:
    sum_{k=1..n} 2^(k-1) (k-1)! (n+k-1)! / (2k-1)!."""
    _require(n >= 1, f"a087547 needs n >= 1, got {n}")
    term = Fraction(factorial(n))
    total = Fraction(0)
    for k in range(1, n + 1):
        total += term
        term *= Fraction(n + k, 2 * k + 1)
    return total


def a182525(n: int) -> int:
    """A182525(n) = n! sum_{k=0..n} C(2n, 2k) / C(n, k)."""
    _require(n >= 0, f"a182525 needs n >= 0, got {n}")
    b_even = 1  # C(2n, 2k)
    b_row = 1  # C(n, k)
    total = Fraction(0)
    for k in range(n + 1):
        if k:
            j = 2 * (k - 1)
            b_even = b_even * (2 * n - j) * (2 * n - 1 - j) // ((j + 1) * (j + 2))
            b_row = b_row * (n - k + 1) // k
        total += Fraction(b_even, b_row)
    return as_integer(factorial(n) * total, f"a182525({n})")


class FormulaId(Enum):
    """Stable identifiers, one per evaluation routine."""

    COMPLETE = "complete"
    PATH = "path"
    CYCLE = "cycle"
    KING2 = "king2"
    KING2_FIRST_COLUMN = "king2-first-column"
    GRID2 = "grid2"
    GRID2_A087923 = "grid2-a087923"
    A087547_SUM = "a087547-sum"
    A087547_RECURSION = "a087547-rec"
    BALA_LHS = "bala-lhs"
    BALA_RHS = "bala-rhs"
    BALA_PRODUCT = "bala-product"
    BALA_FACTORIAL = "bala-factorial"
    A182525 = "a182525"


_EVALUATORS: dict[FormulaId, Callable[[int], Union[int, Fraction]]] = {
    FormulaId.COMPLETE: complete_labelings,
    FormulaId.PATH: path_labelings,
    FormulaId.CYCLE: cycle_labelings,
    FormulaId.KING2: king2_labelings,
    FormulaId.KING2_FIRST_COLUMN: king2_first_column_starts,
    FormulaId.GRID2: grid2_labelings,
    FormulaId.GRID2_A087923: a087923,
    FormulaId.A087547_SUM: a087547_from_sum,
    FormulaId.A087547_RECURSION: a087547_from_recursion,
    FormulaId.BALA_LHS: bala_identity_lhs,
    FormulaId.BALA_RHS: bala_identity_rhs,
    FormulaId.BALA_PRODUCT: a087547_bala_product,
    FormulaId.BALA_FACTORIAL: a087547_bala_factorial,
    FormulaId.A182525: a182525,
}


def evaluate(formula: FormulaId, n: int) -> Union[int, Fraction]:
    """Dispatch a formula id to its unique evaluation routine."""
    return _EVALUATORS[formula](n)
