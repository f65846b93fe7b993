"""Adaptive Simpson quadrature with an interval-halving error estimate.

Self-contained on purpose: the verification suite uses this as the numeric
side of integral identities whose other side is exact, so the integrator
must not share machinery with anything it is checking.
"""

from __future__ import annotations

from typing import Callable

__all__ = ["QuadratureError", "adaptive_simpson"]


class QuadratureError(RuntimeError):
    """Raised when the subinterval budget runs out before convergence."""


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    *,
    tol: float = 1e-10,
    max_intervals: int = 10**6,
) -> float:
    """Integrate f over [a, b] by adaptive Simpson subdivision.

    An interval is accepted when the halved-interval estimate moves by at
    most 15 * tol (the classical error bound for Simpson's rule), with tol
    applied absolutely below magnitude 1 and relatively above.  Accepted
    intervals get the Richardson-extrapolated value.  Splitting more than
    ``max_intervals`` times raises QuadratureError.
    """
    if a > b:
        raise ValueError(f"integration bounds must satisfy a <= b, got {a} > {b}")
    if a == b:
        return 0.0
    splits = [0]

    def simpson(lo: float, flo: float, fmid: float, fhi: float, hi: float) -> float:
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)

    def recurse(lo, flo, mid, fmid, hi, fhi, whole, tol):
        lmid = 0.5 * (lo + mid)
        rmid = 0.5 * (mid + hi)
        if lmid <= lo or rmid >= hi:  # float resolution exhausted
            return whole
        flmid = f(lmid)
        frmid = f(rmid)
        left = simpson(lo, flo, flmid, fmid, mid)
        right = simpson(mid, fmid, frmid, fhi, hi)
        refined = left + right
        delta = refined - whole
        if abs(delta) <= 15.0 * tol * max(1.0, abs(refined)):
            return refined + delta / 15.0
        splits[0] += 2
        if splits[0] > max_intervals:
            raise QuadratureError(
                f"exceeded {max_intervals} subintervals without converging"
            )
        half = 0.5 * tol
        return recurse(lo, flo, lmid, flmid, mid, fmid, left, half) + recurse(
            mid, fmid, rmid, frmid, hi, fhi, right, half
        )

    fa, fb = f(a), f(b)
    mid = 0.5 * (a + b)
    fmid = f(mid)
    return recurse(a, fa, mid, fmid, b, fb, simpson(a, fa, fmid, fb, b), tol)
