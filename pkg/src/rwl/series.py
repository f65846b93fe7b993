"""Truncated formal power series over exact rationals.

A series carries exactly ``order`` coefficients, for x^0 .. x^(order-1);
every operation preserves the declared truncation, and mixing orders is an
error.  Coefficients are ``fractions.Fraction``, so equality of series is
meaningful and exact.  This is enough to expand the closed-form generating
functions used by the verification suite: square roots of 1 + O(x),
reciprocals of units, arctangents of series with zero constant term, and
composition.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .combinat import factorial

__all__ = [
    "DEFAULT_ORDER",
    "PowerSeries",
    "a087547_gf",
    "a182525_egf",
    "grid2_egf",
]

DEFAULT_ORDER = 32

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class PowerSeries:
    """Formal power series truncated to a fixed number of coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        self._coeffs = tuple(Fraction(c) for c in coeffs)
        if not self._coeffs:
            raise ValueError("a series needs at least one coefficient")

    @classmethod
    def from_coefficients(cls, values: Iterable[Scalar], order: int) -> "PowerSeries":
        """Series with the given low-order coefficients, zero-padded (or
        truncated) to ``order``."""
        vals = [Fraction(v) for v in values][:order]
        vals.extend([_ZERO] * (order - len(vals)))
        return cls(vals)

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "PowerSeries":
        return cls.from_coefficients([value], order)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls.from_coefficients([0, 1], order)

    @property
    def order(self) -> int:
        return len(self._coeffs)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of x^i; IndexError beyond the truncation order."""
        if not 0 <= i < self.order:
            raise IndexError(f"coefficient {i} out of range for order {self.order}")
        return self._coeffs[i]

    def egf_term(self, i: int) -> Fraction:
        """i! times the coefficient of x^i."""
        return self.coefficient(i) * factorial(i)

    def _check_order(self, other: "PowerSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"PowerSeries({[str(c) for c in self._coeffs]})"

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            self._check_order(other)
            return PowerSeries(a + b for a, b in zip(self._coeffs, other._coeffs))
        if isinstance(other, (int, Fraction)):
            return PowerSeries((self._coeffs[0] + other,) + self._coeffs[1:])
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-c for c in self._coeffs)

    def __sub__(self, other):
        if isinstance(other, PowerSeries):
            self._check_order(other)
            return PowerSeries(a - b for a, b in zip(self._coeffs, other._coeffs))
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            self._check_order(other)
            n = self.order
            out = [_ZERO] * n
            for i, a in enumerate(self._coeffs):
                if not a:
                    continue
                for j in range(n - i):
                    b = other._coeffs[j]
                    if b:
                        out[i + j] += a * b
            return PowerSeries(out)
        if isinstance(other, (int, Fraction)):
            return PowerSeries(c * other for c in self._coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def reciprocal(self) -> "PowerSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        c0 = self._coeffs[0]
        if c0 == 0:
            raise ValueError("reciprocal needs a nonzero constant term")
        inv0 = _ONE / c0
        out = [inv0] + [_ZERO] * (self.order - 1)
        for m in range(1, self.order):
            acc = _ZERO
            for k in range(1, m + 1):
                a = self._coeffs[k]
                if a:
                    acc += a * out[m - k]
            out[m] = -acc * inv0
        return PowerSeries(out)

    def sqrt(self) -> "PowerSeries":
        """Square root normalized to constant term 1 (callers factor
        constants out, avoiding square roots of rationals)."""
        if self._coeffs[0] != 1:
            raise ValueError("sqrt needs constant term exactly 1")
        out = [_ONE] + [_ZERO] * (self.order - 1)
        for m in range(1, self.order):
            acc = _ZERO
            for k in range(1, m):
                out_k = out[k]
                if out_k:
                    acc += out_k * out[m - k]
            out[m] = (self._coeffs[m] - acc) / 2
        return PowerSeries(out)

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """Formal composition self(inner(x)); inner must have zero
        constant term for the truncation to be well defined."""
        self._check_order(inner)
        if inner._coeffs[0] != 0:
            raise ValueError("composition needs an inner series with zero constant term")
        acc = PowerSeries.constant(self._coeffs[-1], self.order)
        for i in range(self.order - 2, -1, -1):
            acc = acc * inner + self._coeffs[i]
        return acc

    def arctan(self) -> "PowerSeries":
        """arctan of a series with zero constant term:
        sum_k (-1)^k u^(2k+1) / (2k+1), truncated."""
        if self._coeffs[0] != 0:
            raise ValueError("arctan needs a series with zero constant term")
        out = PowerSeries.constant(0, self.order)
        u_squared = self * self
        power = self
        k = 0
        while 2 * k + 1 < self.order:
            out = out + power * Fraction((-1) ** k, 2 * k + 1)
            power = power * u_squared
            k += 1
        return out

    def derivative(self) -> "PowerSeries":
        """Formal derivative; the result has order - 1 known coefficients."""
        if self.order < 2:
            raise ValueError("cannot differentiate an order-1 series")
        return PowerSeries(i * self._coeffs[i] for i in range(1, self.order))

    def integral(self, constant: Scalar = 0) -> "PowerSeries":
        """Formal antiderivative with the given constant term; order grows
        by one since all integrated coefficients are known."""
        out = [Fraction(constant)]
        out.extend(self._coeffs[i] / (i + 1) for i in range(self.order))
        return PowerSeries(out)

    def truncate(self, order: int) -> "PowerSeries":
        if not 1 <= order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} to {order}")
        return PowerSeries(self._coeffs[:order])


def grid2_egf(order: int = DEFAULT_ORDER) -> PowerSeries:
    """Exponential generating function of the 2 x n grid labeling counts:

        ((1-2x)^2 arctan(2x / sqrt(1-4x)) + 2x sqrt(1-4x)) / (2 sqrt(1-4x)^3)
    """
    x = PowerSeries.x(order)
    one = PowerSeries.constant(1, order)
    root = (one - 4 * x).sqrt()
    theta = ((2 * x) * root.reciprocal()).arctan()
    one_minus_2x = one - 2 * x
    numerator = one_minus_2x * one_minus_2x * theta + (2 * x) * root
    denominator = 2 * (root * root * root)
    return numerator * denominator.reciprocal()


def a087547_gf(order: int = DEFAULT_ORDER) -> PowerSeries:
    """Generating function whose x^n coefficient times (n-1)! is A087547(n):

        x ((1-x) arctan(x / sqrt(1-2x)) + sqrt(1-2x)) / ((1-x) sqrt(1-2x)^3)
    """
    x = PowerSeries.x(order)
    one = PowerSeries.constant(1, order)
    root = (one - 2 * x).sqrt()
    theta = (x * root.reciprocal()).arctan()
    one_minus_x = one - x
    numerator = x * (one_minus_x * theta + root)
    denominator = one_minus_x * (root * root * root)
    return numerator * denominator.reciprocal()


def a182525_egf(order: int = DEFAULT_ORDER) -> PowerSeries:
    """Exponential generating function of A182525:

        (x arctan(x / sqrt(1-2x)) + sqrt(1-2x)) / sqrt(1-2x)^3
    """
    x = PowerSeries.x(order)
    one = PowerSeries.constant(1, order)
    root = (one - 2 * x).sqrt()
    theta = (x * root.reciprocal()).arctan()
    numerator = x * theta + root
    denominator = root * root * root
    return numerator * denominator.reciprocal()
