"""Machine verification of the package's analytic claims.

Claims come in three flavours:

* exact equalities between independently evaluated closed forms, swept
  over a range of n with zero tolerance;
* generating-function checks, comparing factorial-scaled series
  coefficients against the closed-form sequences, again exactly;
* numeric checks -- the two quadrature identities and the 2 x n grid
  asymptotic -- which carry explicit tolerances or monotonicity
  requirements and report their residuals.

Each verifier returns a :class:`VerificationResult`; nothing raises on a
failed claim, so sweeps always run to a reportable conclusion.  Sweeps may
fan out over threads; the RWL_THREADS environment variable caps the worker
count (exact integer work gains little under the GIL, so this is mostly a
throttle).  Results are deterministic regardless of schedule.
"""

from __future__ import annotations

import math
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import mpmath

from . import formulas, series
from .combinat import binomial, factorial
from .graphs import Graph, FamilySpec, build_family
from .quadrature import adaptive_simpson
from .walks import count_labelings_dp, enumerate_labelings_walk

__all__ = [
    "EXACT_CLAIMS",
    "VerificationResult",
    "family_census",
    "random_connected_graph",
    "verify_egf_a182525",
    "verify_egf_gg2",
    "verify_equal_forms",
    "verify_gf_a087547",
    "verify_grid2_asymptotic",
    "verify_integral_identities",
    "verify_oracle_equivalence",
    "worker_count",
]


@dataclass
class VerificationResult:
    """Outcome of one claim: pass/fail, the range tested, the first
    counterexample if any, residuals for numeric checks, and wall time."""

    claim: str
    tested: str
    passed: bool
    counterexample: str | None = None
    max_residual: float | None = None
    values: dict[str, str] = field(default_factory=dict)
    elapsed_s: float = 0.0


def worker_count() -> int:
    """Worker cap for sweeps: RWL_THREADS if set and valid, else machine
    parallelism."""
    raw = os.environ.get("RWL_THREADS")
    if raw:
        try:
            value = int(raw)
        except ValueError:
            value = 0
        if value >= 1:
            return value
    return os.cpu_count() or 1


def _sweep(check: Callable[[int], str | None], lo: int, hi: int) -> str | None:
    """Run check(n) for lo <= n <= hi, possibly in parallel chunks, and
    return the counterexample with smallest n (None if all pass)."""
    ns = range(lo, hi + 1)
    workers = min(worker_count(), max(1, len(ns) // 32))
    if workers <= 1:
        for n in ns:
            bad = check(n)
            if bad is not None:
                return bad
        return None
    chunks = [ns[i::workers] for i in range(workers)]

    def run_chunk(chunk: Sequence[int]) -> tuple[int, str] | None:
        for n in chunk:
            bad = check(n)
            if bad is not None:
                return (n, bad)
        return None

    with ThreadPoolExecutor(max_workers=workers) as pool:
        hits = [hit for hit in pool.map(run_chunk, chunks) if hit is not None]
    if not hits:
        return None
    return min(hits)[1]


EXACT_CLAIMS: dict[str, tuple[Callable, Callable]] = {
    # the two closed forms for 2 x n grid labeling counts
    "eq915": (formulas.grid2_labelings, formulas.a087923),
    # A087547: inverse-binomial sum vs recursion
    "eq771": (formulas.a087547_from_sum, formulas.a087547_from_recursion),
    # Bala's identity: weighted vs prefactored inverse-central-binomial sums
    "eq003": (formulas.bala_identity_lhs, formulas.bala_identity_rhs),
    # the two published forms of A087547 due to Bala
    "eq900-vs-901": (formulas.a087547_bala_product, formulas.a087547_bala_factorial),
}


def verify_equal_forms(claim: str, n_max: int) -> VerificationResult:
    """Exact equality of the two sides of a registered claim for
    1 <= n <= n_max."""
    if claim not in EXACT_CLAIMS:
        raise ValueError(f"unknown exact claim: {claim!r}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    lhs, rhs = EXACT_CLAIMS[claim]
    start = time.perf_counter()

    def check(n: int) -> str | None:
        a, b = lhs(n), rhs(n)
        if a != b:
            return f"n={n}: {a} != {b}"
        return None

    bad = _sweep(check, 1, n_max)
    return VerificationResult(
        claim=claim,
        tested=f"n=1..{n_max}",
        passed=bad is None,
        counterexample=bad,
        elapsed_s=time.perf_counter() - start,
    )


def _verify_gf(
    claim: str,
    build: Callable[[int], series.PowerSeries],
    expected: Callable[[int], int],
    scale_shift: int,
    first: int,
    terms: int,
) -> VerificationResult:
    if terms < first:
        raise ValueError(f"terms must be >= {first}, got {terms}")
    start = time.perf_counter()
    gf = build(terms + 1)
    bad = None
    for n in range(first, terms + 1):
        got = gf.coefficient(n) * factorial(n - scale_shift)
        want = expected(n)
        if got != want:
            bad = f"n={n}: coefficient gives {got}, closed form gives {want}"
            break
    return VerificationResult(
        claim=claim,
        tested=f"n={first}..{terms}",
        passed=bad is None,
        counterexample=bad,
        elapsed_s=time.perf_counter() - start,
    )


def verify_egf_gg2(terms: int = 25) -> VerificationResult:
    """n! [x^n] of the grid egf equals the 2 x n grid closed form."""
    return _verify_gf(
        "egf-gg2", series.grid2_egf, formulas.grid2_labelings, 0, 1, terms
    )


def verify_gf_a087547(terms: int = 25) -> VerificationResult:
    """(n-1)! [x^n] of the A087547 gf equals the recursion values."""
    return _verify_gf(
        "ogf-a087547", series.a087547_gf, formulas.a087547_from_recursion, 1, 1, terms
    )


def verify_egf_a182525(terms: int = 25) -> VerificationResult:
    """n! [x^n] of the A182525 egf equals the finite-sum values."""
    return _verify_gf(
        "egf-a182525", series.a182525_egf, formulas.a182525, 0, 0, terms
    )


def _exact_odd_sum(n: int) -> Fraction:
    """sum_{k=0..n} C(2n+1, 2k) / C(n, k)."""
    return sum(
        (Fraction(binomial(2 * n + 1, 2 * k), binomial(n, k)) for k in range(n + 1)),
        Fraction(0),
    )


def _exact_even_sum(n: int) -> Fraction:
    """sum_{k=0..n} C(2n, 2k) / C(n, k)."""
    return sum(
        (Fraction(binomial(2 * n, 2 * k), binomial(n, k)) for k in range(n + 1)),
        Fraction(0),
    )


def verify_integral_identities(
    n_max: int = 20, tol: float = 1e-8, quad_tol: float = 1e-10
) -> VerificationResult:
    """Both closed-form integral identities for the inverse-binomial sums,
    checked numerically for 1 <= n <= n_max.

    Identity 1:  sum C(2n+1,2k)/C(n,k)
                 = 1 + (2n+1)/2 * Int_0^{pi/2} (1+sin 2t)^n - (1-sin 2t)^n dt
    Identity 2:  sum C(2n,2k)/C(n,k)
                 = 1 + n * Int_0^{pi/2} cos t ((cos t + sin t)^{2n-1}
                                               - (cos t - sin t)^{2n-1}) dt

    The exact side is rational arithmetic; the integral side is adaptive
    Simpson at quad_tol.  Integrand magnitudes stay sane in double
    precision only up to about n = 30, hence the bound.
    """
    if not 1 <= n_max <= 30:
        raise ValueError(f"n_max must be in 1..30, got {n_max}")
    if tol < 1e-8:
        raise ValueError(f"tol must be >= 1e-8, got {tol}")
    start = time.perf_counter()
    half_pi = math.pi / 2
    worst = 0.0
    bad = None
    for n in range(1, n_max + 1):

        def odd_integrand(t: float, n: int = n) -> float:
            s = math.sin(2 * t)
            return (1 + s) ** n - (1 - s) ** n

        def even_integrand(t: float, n: int = n) -> float:
            c, s = math.cos(t), math.sin(t)
            return c * ((c + s) ** (2 * n - 1) - (c - s) ** (2 * n - 1))

        pairs = (
            ("odd", _exact_odd_sum(n), 1.0 + (2 * n + 1) / 2.0
             * adaptive_simpson(odd_integrand, 0.0, half_pi, tol=quad_tol)),
            ("even", _exact_even_sum(n), 1.0 + n
             * adaptive_simpson(even_integrand, 0.0, half_pi, tol=quad_tol)),
        )
        for tag, exact, numeric in pairs:
            exact_f = float(exact)
            residual = abs(numeric - exact_f) / max(1.0, abs(exact_f))
            worst = max(worst, residual)
            if residual > tol and bad is None:
                bad = f"n={n} ({tag} identity): residual {residual:.3e} > {tol:.1e}"
    return VerificationResult(
        claim="lemma37",
        tested=f"n=1..{n_max}",
        passed=bad is None,
        counterexample=bad,
        max_residual=worst,
        elapsed_s=time.perf_counter() - start,
    )


def verify_grid2_asymptotic(
    points: Iterable[int] = (25, 50, 100, 200, 400)
) -> VerificationResult:
    """Ratios r_n = L(2 x n grid) / (sqrt(pi n) n! 2^(2n-3)) at the given
    points, which must be strictly increasing in n and at most 2000.

    No closeness bound is asserted -- the growth claim comes with no rate
    constant -- but |r_n - 1| must strictly shrink between consecutive
    tested points.  The numerator is exact; the denominator is evaluated
    to 40 significant digits and each r_n is recorded to 15.
    """
    pts = list(points)
    if not pts:
        raise ValueError("need at least one point")
    if any(b <= a for a, b in zip(pts, pts[1:])):
        raise ValueError(f"points must be strictly increasing, got {pts}")
    if pts[-1] > 2000:
        raise ValueError(f"points must be <= 2000, got {pts[-1]}")
    start = time.perf_counter()
    values: dict[str, str] = {}
    bad = None
    prev_gap = None
    prev_n = None
    with mpmath.workdps(40):
        for n in pts:
            exact = formulas.grid2_labelings(n)
            denominator = (
                mpmath.sqrt(mpmath.pi * n)
                * mpmath.factorial(n)
                * mpmath.power(2, 2 * n - 3)
            )
            ratio = mpmath.mpf(exact) / denominator
            gap = abs(ratio - 1)
            values[f"r[{n}]"] = mpmath.nstr(ratio, 15)
            if prev_gap is not None and not gap < prev_gap and bad is None:
                bad = (
                    f"|r-1| did not shrink from n={prev_n} to n={n}: "
                    f"{mpmath.nstr(prev_gap, 6)} -> {mpmath.nstr(gap, 6)}"
                )
            prev_gap, prev_n = gap, n
    return VerificationResult(
        claim="asymptotic",
        tested=f"n in {pts}",
        passed=bad is None,
        counterexample=bad,
        values=values,
        elapsed_s=time.perf_counter() - start,
    )


def family_census(n_max: int) -> list[Graph]:
    """All family graphs of order <= n_max: paths, cycles, completes, and
    king/grid boards with m * n <= n_max (m <= n to skip transposes)."""
    graphs: list[Graph] = []
    for k in range(1, n_max + 1):
        graphs.append(build_family(FamilySpec("path", k)))
        graphs.append(build_family(FamilySpec("complete", k)))
        if k >= 3:
            graphs.append(build_family(FamilySpec("cycle", k)))
    for m in range(1, n_max + 1):
        for n in range(m, n_max // m + 1):
            graphs.append(build_family(FamilySpec("king", n, m)))
            graphs.append(build_family(FamilySpec("grid", n, m)))
    return graphs


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Random connected graph: a random spanning tree plus independent
    extra edges."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        j = rng.choice(order[:i])
        u, v = order[i], j
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.35:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges), f"random({n})")


def verify_oracle_equivalence(
    n_max: int = 7,
    random_graphs: int = 0,
    seed: int = 0,
    random_order_max: int = 7,
) -> VerificationResult:
    """The walk enumerator and the subset DP agree on every family graph
    of order <= n_max plus ``random_graphs`` random connected graphs of
    order <= random_order_max."""
    if not 1 <= n_max <= 10:
        raise ValueError(f"n_max must be in 1..10 (enumeration bound), got {n_max}")
    start = time.perf_counter()
    graphs = family_census(n_max)
    rng = random.Random(seed)
    for _ in range(random_graphs):
        graphs.append(random_connected_graph(rng, rng.randint(2, random_order_max)))

    def check(g: Graph) -> str | None:
        walked = len(enumerate_labelings_walk(g))
        counted = count_labelings_dp(g)
        if walked != counted:
            return f"{g.name or g.edges()}: walk {walked} != dp {counted}"
        return None

    workers = min(worker_count(), 8)
    bad = None
    if workers <= 1 or len(graphs) < 8:
        for g in graphs:
            bad = check(g)
            if bad is not None:
                break
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for result in pool.map(check, graphs):
                if result is not None:
                    bad = result
                    break
    return VerificationResult(
        claim="oracle-equivalence",
        tested=f"{len(graphs)} graphs (families to order {n_max}, "
        f"{random_graphs} random to order {random_order_max})",
        passed=bad is None,
        counterexample=bad,
        elapsed_s=time.perf_counter() - start,
    )
