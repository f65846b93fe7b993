"""Exact combinatorial primitives: factorials, binomials, Catalan numbers.

Counts are plain Python ints (arbitrary precision) and exact rationals are
``fractions.Fraction``.  A :class:`CombCache` owns append-only memo tables
so that identity sweeps (n up to a few thousand) never recompute factorials
from scratch.
"""

from __future__ import annotations

import threading
from fractions import Fraction

__all__ = [
    "CombCache",
    "as_integer",
    "binomial",
    "catalan",
    "factorial",
    "render_exact",
]


class CombCache:
    """Memoized factorial / binomial / Catalan lookups.

    Tables are append-only; growth happens under a lock, so concurrent
    lookups always observe identical values.  ``rows`` factorial rows are
    filled eagerly (default 4096, enough for sweeps needing ``(2n)!`` at
    n = 2048); the tables keep growing on demand beyond that.
    """

    def __init__(self, rows: int = 4096):
        self._fact: list[int] = [1]
        self._catalan: list[int] = [1]
        self._lock = threading.Lock()
        if rows > 0:
            self._grow_factorials(rows)

    def _grow_factorials(self, k: int) -> None:
        with self._lock:
            fact = self._fact
            while len(fact) <= k:
                fact.append(fact[-1] * len(fact))

    def factorial(self, k: int) -> int:
        """Exact k! for k >= 0."""
        if k < 0:
            raise ValueError(f"factorial is undefined for negative k: {k}")
        if k >= len(self._fact):
            self._grow_factorials(k)
        return self._fact[k]

    def binomial(self, n: int, k: int) -> int:
        """Exact C(n, k); out-of-range k (k < 0 or k > n) yields 0."""
        if n < 0:
            raise ValueError(f"binomial is undefined for negative n: {n}")
        if k < 0 or k > n:
            return 0
        return self.factorial(n) // (self.factorial(k) * self.factorial(n - k))

    def catalan(self, k: int) -> int:
        """Exact Catalan number C(2k, k) / (k + 1)."""
        if k < 0:
            raise ValueError(f"catalan is undefined for negative k: {k}")
        if k >= len(self._catalan):
            with self._lock:
                cat = self._catalan
                while len(cat) <= k:
                    j = len(cat)
                    cat.append(self.binomial(2 * j, j) // (j + 1))
        return self._catalan[k]


_default_cache: CombCache | None = None


def _cache() -> CombCache:
    global _default_cache
    if _default_cache is None:
        _default_cache = CombCache()
    return _default_cache


def factorial(k: int) -> int:
    return _cache().factorial(k)


def binomial(n: int, k: int) -> int:
    return _cache().binomial(n, k)


def catalan(k: int) -> int:
    return _cache().catalan(k)


def as_integer(value: Fraction, what: str = "value") -> int:
    """Collapse an exact rational that must be a whole number to int.

    Raises ArithmeticError otherwise; with correct formulas this never
    fires, so a failure here points at a transcription bug.
    """
    if value.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {value}")
    return int(value)


def render_exact(value: int | Fraction) -> str:
    """Decimal rendering used in all CLI/service output: "num/den" when
    the denominator is not 1, plain decimal digits otherwise."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)
