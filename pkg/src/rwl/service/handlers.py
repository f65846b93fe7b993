"""Request handlers shared by the HTTP endpoints and the CLI.

Each handler takes a request model and returns a response model; all
counting, verification, and rendering decisions live here so the CLI and
the HTTP surface cannot drift apart.
"""

from __future__ import annotations

import time
from typing import Optional

from .. import __version__, formulas, verification
from ..combinat import factorial, render_exact
from ..graphs import (
    EdgeListParseError,
    FamilySpec,
    Graph,
    build_family,
    is_connected,
    parse_graph,
)
from ..series import DEFAULT_ORDER, a087547_gf, a182525_egf, grid2_egf
from ..walks import (
    DP_MAX_VERTICES,
    WALK_ENUMERATION_MAX,
    count_labelings_dp,
    enumerate_labelings_walk,
)
from .schemas import (
    CountRequest,
    FamilyParams,
    Report,
    ReportList,
    SeriesRequest,
    ServiceInfo,
    TableRequest,
    VerifyRequest,
)

SERVICE_NAME = "random-walk-labelings"

CLAIMS = (
    "eq915",
    "eq771",
    "eq003",
    "eq900-vs-901",
    "egf-gg2",
    "ogf-a087547",
    "egf-a182525",
    "lemma37",
    "asymptotic",
    "oracle-equivalence",
)

SERIES_IDS = ("gg2", "a087547", "a182525")

FAMILY_CHOICES = ("complete", "path", "cycle", "king", "grid", "king2", "grid2")

_FAMILY_ALIASES = {"king2": ("king", 2), "grid2": ("grid", 2)}


class RequestError(ValueError):
    """Invalid request; ``kind`` selects the HTTP status detail and the
    CLI exit code (parse/usage problems vs size limits)."""

    def __init__(self, kind: str, message: str):
        self.kind = kind
        super().__init__(message)


def _resolve_kind(kind: str, m: Optional[int]) -> tuple[str, Optional[int]]:
    if kind in _FAMILY_ALIASES:
        kind, implied_m = _FAMILY_ALIASES[kind]
        if m is not None and m != implied_m:
            raise RequestError(
                "invalid-request", f"{kind}2 fixes m={implied_m}, got m={m}"
            )
        m = implied_m
    if kind in ("king", "grid") and m is None:
        m = 2
    return kind, m


def resolve_family(params: FamilyParams) -> FamilySpec:
    kind, m = _resolve_kind(params.kind, params.m)
    try:
        return FamilySpec(kind, params.n, m)
    except ValueError as exc:
        raise RequestError("invalid-request", str(exc)) from exc


def closed_form_count(spec: FamilySpec) -> Optional[int]:
    """Closed-form labeling count for a family, or None when only the DP
    applies (boards with both sides >= 3)."""
    if spec.kind == "complete":
        return formulas.complete_labelings(spec.n)
    if spec.kind == "path":
        return formulas.path_labelings(spec.n)
    if spec.kind == "cycle":
        return formulas.cycle_labelings(spec.n)
    m, n = spec.m, spec.n
    assert m is not None
    if m > n:
        m, n = n, m  # boards count the same transposed
    if m == 1:
        return formulas.path_labelings(n)
    if m == 2:
        return formulas.king2_labelings(n) if spec.kind == "king" else formulas.grid2_labelings(n)
    return None


def _count_methods(req_method: str, g: Graph, spec: Optional[FamilySpec]) -> list[str]:
    has_formula = spec is not None and closed_form_count(spec) is not None
    if req_method == "all":
        methods = []
        if g.n <= DP_MAX_VERTICES:
            methods.append("dp")
        if g.n <= WALK_ENUMERATION_MAX:
            methods.append("walk")
        if has_formula:
            methods.append("formula")
        if not methods:
            raise RequestError(
                "too-large", f"no applicable counting method for n={g.n}"
            )
        return methods
    if req_method == "dp" and g.n > DP_MAX_VERTICES:
        raise RequestError(
            "too-large", f"dp supports n <= {DP_MAX_VERTICES}, got n={g.n}"
        )
    if req_method == "walk" and g.n > WALK_ENUMERATION_MAX:
        raise RequestError(
            "too-large", f"walk supports n <= {WALK_ENUMERATION_MAX}, got n={g.n}"
        )
    if req_method == "formula" and not has_formula:
        raise RequestError(
            "invalid-request",
            "formula needs a family input with a closed form "
            "(complete, path, cycle, or a board with a side of 1 or 2)",
        )
    return [req_method]


def count(req: CountRequest) -> ReportList:
    if (req.family is None) == (req.graph_text is None):
        raise RequestError(
            "invalid-request", "provide exactly one of family or graph_text"
        )
    spec: Optional[FamilySpec] = None
    if req.family is not None:
        spec = resolve_family(req.family)
        graph = build_family(spec)
        label = f"family:{spec.label()}"
    else:
        assert req.graph_text is not None
        try:
            graph = parse_graph(req.graph_text, name=req.source)
        except EdgeListParseError as exc:
            raise RequestError("parse-error", str(exc)) from exc
        label = f"graph:{req.source or 'edge-list'}"
    methods = _count_methods(req.method, graph, spec)
    connected = is_connected(graph)
    reports = []
    for method in methods:
        started = time.perf_counter()
        if method == "dp":
            value = count_labelings_dp(graph)
        elif method == "walk":
            value = len(enumerate_labelings_walk(graph))
        else:
            assert spec is not None
            formula_value = closed_form_count(spec)
            assert formula_value is not None
            value = formula_value
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        reports.append(
            Report(
                input=label,
                method=method,
                value=render_exact(value),
                params={"n": graph.n, "edges": graph.edge_count},
                elapsed_ms=round(elapsed_ms, 3),
                status="ok" if connected else "disconnected",
            )
        )
    if len({r.value for r in reports}) > 1:
        for r in reports:
            r.status = "disagreement"
    return ReportList(reports=reports)


def family_table(req: TableRequest) -> ReportList:
    kind, m = _resolve_kind(req.family, req.m)
    if kind not in ("complete", "path", "cycle", "king", "grid"):
        raise RequestError("invalid-request", f"unknown family kind: {kind!r}")
    first_n = 3 if kind == "cycle" else 1
    if req.n_max < first_n:
        return ReportList(reports=[])
    tag = kind if m is None else f"{kind}{m}"
    reports = []
    for n in range(first_n, req.n_max + 1):
        try:
            spec = FamilySpec(kind, n, m)
        except ValueError as exc:
            raise RequestError("invalid-request", str(exc)) from exc
        started = time.perf_counter()
        value = closed_form_count(spec)
        if value is None:
            raise RequestError(
                "invalid-request",
                f"no closed form for {spec.label()}; use the count command with dp",
            )
        reports.append(
            Report(
                input=f"family:{tag}",
                method="formula",
                value=render_exact(value),
                params={"family": tag, "n": n},
                elapsed_ms=round((time.perf_counter() - started) * 1000.0, 3),
                status="ok",
            )
        )
    return ReportList(reports=reports)


def _run_claim(req: VerifyRequest) -> verification.VerificationResult:
    claim = req.claim
    if claim in verification.EXACT_CLAIMS:
        return verification.verify_equal_forms(claim, req.n_max or 100)
    if claim == "egf-gg2":
        return verification.verify_egf_gg2(req.terms or 25)
    if claim == "ogf-a087547":
        return verification.verify_gf_a087547(req.terms or 25)
    if claim == "egf-a182525":
        return verification.verify_egf_a182525(req.terms or 25)
    if claim == "lemma37":
        return verification.verify_integral_identities(
            n_max=req.n_max or 20, tol=req.tol if req.tol is not None else 1e-8
        )
    if claim == "asymptotic":
        points = tuple(req.points) if req.points else (25, 50, 100, 200, 400)
        return verification.verify_grid2_asymptotic(points)
    if claim == "oracle-equivalence":
        return verification.verify_oracle_equivalence(
            n_max=req.n_max or 6, random_graphs=req.random_graphs, seed=req.seed
        )
    raise RequestError("unknown-claim", f"unknown claim {claim!r}; known: {CLAIMS}")


def verify(req: VerifyRequest) -> ReportList:
    try:
        result = _run_claim(req)
    except RequestError:
        raise
    except ValueError as exc:
        raise RequestError("invalid-request", str(exc)) from exc
    params: dict = {"claim": result.claim, "tested": result.tested}
    if result.max_residual is not None:
        params["max_residual"] = f"{result.max_residual:.15g}"
    if result.values:
        params["values"] = result.values
    if result.counterexample is not None:
        params["counterexample"] = result.counterexample
    report = Report(
        input=f"claim:{req.claim}",
        method="verify",
        value=None,
        params=params,
        elapsed_ms=round(result.elapsed_s * 1000.0, 3),
        status="pass" if result.passed else "fail",
    )
    return ReportList(reports=[report])


_SERIES_BUILDERS = {
    # builder, factorial shift for the scaled term, first meaningful index
    "gg2": (grid2_egf, 0, 1),
    "a087547": (a087547_gf, 1, 1),
    "a182525": (a182525_egf, 0, 0),
}


def expand_series(req: SeriesRequest) -> ReportList:
    if req.terms < 0:
        raise RequestError("invalid-request", f"terms must be >= 0, got {req.terms}")
    build, shift, first = _SERIES_BUILDERS[req.egf]
    started = time.perf_counter()
    gf = build(max(req.terms + 1, first + 1))
    coefficients = [str(c) for c in gf.coefficients]
    terms = {
        str(n): render_exact(gf.coefficient(n) * factorial(n - shift))
        for n in range(first, req.terms + 1)
    }
    report = Report(
        input=f"series:{req.egf}",
        method="series",
        value=None,
        params={"egf": req.egf, "coefficients": coefficients, "terms": terms},
        elapsed_ms=round((time.perf_counter() - started) * 1000.0, 3),
        status="ok",
    )
    return ReportList(reports=[report])


def info() -> ServiceInfo:
    return ServiceInfo(
        name=SERVICE_NAME,
        version=__version__,
        families=list(FAMILY_CHOICES),
        methods=["dp", "walk", "formula", "all"],
        claims=list(CLAIMS),
        series=list(SERIES_IDS),
        limits={
            "dp_max_vertices": DP_MAX_VERTICES,
            "dp_practical_vertices": 26,
            "walk_enumeration_max": WALK_ENUMERATION_MAX,
            "default_series_order": DEFAULT_ORDER,
        },
        workers=verification.worker_count(),
    )
