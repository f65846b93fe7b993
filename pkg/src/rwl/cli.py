"""Command-line front end: a thin client of the service layer.

Every subcommand builds the same request model the HTTP endpoints accept,
dispatches it (in process by default, or to a remote service via
--server), and renders the returned reports as JSON lines; family tables
can also render as text or csv.

Exit codes: 0 success / claim passed; 1 claim failed; 2 bad usage, parse
error, or unknown claim; 3 counting-method disagreement (a correctness
bug); 4 graph exceeds a size limit.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

import httpx

from . import __version__
from .service import handlers
from .service.handlers import RequestError
from .service.schemas import (
    CountRequest,
    FamilyParams,
    Report,
    ReportList,
    SeriesRequest,
    ServiceInfo,
    TableRequest,
    VerifyRequest,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DISAGREEMENT = 3
EXIT_TOO_LARGE = 4


class Client:
    """Dispatches request models either to the in-process handlers or to a
    remote service instance; both paths return the same response models."""

    def __init__(self, server: Optional[str] = None):
        self.server = server.rstrip("/") if server else None

    def _post(self, path: str, payload: dict, model):
        assert self.server is not None
        response = httpx.post(self.server + path, json=payload, timeout=None)
        if response.status_code == 400:
            detail = response.json()
            raise RequestError(
                detail.get("kind", "invalid-request"), detail.get("message", "")
            )
        response.raise_for_status()
        return model.model_validate(response.json())

    def count(self, req: CountRequest) -> ReportList:
        if self.server:
            return self._post("/count", req.model_dump(), ReportList)
        return handlers.count(req)

    def family_table(self, req: TableRequest) -> ReportList:
        if self.server:
            return self._post("/family-table", req.model_dump(), ReportList)
        return handlers.family_table(req)

    def verify(self, req: VerifyRequest) -> ReportList:
        if self.server:
            return self._post("/verify", req.model_dump(), ReportList)
        return handlers.verify(req)

    def series(self, req: SeriesRequest) -> ReportList:
        if self.server:
            return self._post("/series", req.model_dump(), ReportList)
        return handlers.expand_series(req)

    def info(self) -> ServiceInfo:
        if self.server:
            response = httpx.get(self.server + "/info", timeout=None)
            response.raise_for_status()
            return ServiceInfo.model_validate(response.json())
        return handlers.info()


def _print_reports(reports: list[Report]) -> None:
    for report in reports:
        print(report.model_dump_json())


def _exit_code_for_reports(reports: list[Report]) -> int:
    statuses = {report.status for report in reports}
    if "disagreement" in statuses:
        return EXIT_DISAGREEMENT
    if "fail" in statuses:
        return EXIT_FAIL
    return EXIT_OK


def _exit_code_for_error(error: RequestError) -> int:
    return EXIT_TOO_LARGE if error.kind == "too-large" else EXIT_USAGE


def cmd_count(args: argparse.Namespace) -> int:
    if (args.graph is None) == (args.family is None):
        raise RequestError(
            "invalid-request", "provide exactly one of --graph or --family"
        )
    if args.family is not None:
        if args.n is None:
            raise RequestError("invalid-request", "--family needs --n")
        req = CountRequest(
            family=FamilyParams(kind=args.family, n=args.n, m=args.m),
            method=args.method,
        )
    else:
        try:
            with open(args.graph, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise RequestError("invalid-request", f"cannot read {args.graph}: {exc}")
        req = CountRequest(graph_text=text, source=args.graph, method=args.method)
    result = Client(args.server).count(req)
    _print_reports(result.reports)
    return _exit_code_for_reports(result.reports)


def cmd_family_table(args: argparse.Namespace) -> int:
    req = TableRequest(family=args.family, m=args.m, n_max=args.n_max)
    result = Client(args.server).family_table(req)
    if args.format == "json":
        _print_reports(result.reports)
    elif args.format == "csv":
        print("family,n,value")
        for report in result.reports:
            print(f"{report.params['family']},{report.params['n']},{report.value}")
    else:
        for report in result.reports:
            print(f"{report.params['family']:<10} {report.params['n']:>4}  {report.value}")
    return EXIT_OK


def _parse_points(raw: Optional[str]) -> Optional[list[int]]:
    if raw is None:
        return None
    try:
        return [int(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        raise RequestError("invalid-request", f"bad --points list: {raw!r}")


def cmd_verify(args: argparse.Namespace) -> int:
    req = VerifyRequest(
        claim=args.claim,
        n_max=args.n_max,
        terms=args.terms,
        tol=args.tol,
        points=_parse_points(args.points),
        random_graphs=args.random,
        seed=args.seed,
    )
    result = Client(args.server).verify(req)
    _print_reports(result.reports)
    return _exit_code_for_reports(result.reports)


def cmd_series(args: argparse.Namespace) -> int:
    req = SeriesRequest(egf=args.egf, terms=args.terms)
    result = Client(args.server).series(req)
    _print_reports(result.reports)
    return EXIT_OK


def cmd_info(args: argparse.Namespace) -> int:
    print(Client(args.server).info().model_dump_json())
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("rwl.service.app:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rwl",
        description="Count random walk labelings of graphs and verify the "
        "closed forms, generating functions, and identities behind them.",
    )
    parser.add_argument("--version", action="version", version=f"rwl {__version__}")
    parser.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="send requests to a running service instead of computing in-process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count labelings of one graph")
    count.add_argument("--graph", metavar="FILE", help="edge-list file")
    count.add_argument("--family", choices=list(handlers.FAMILY_CHOICES))
    count.add_argument("--n", type=int)
    count.add_argument("--m", type=int, help="board rows for king/grid (default 2)")
    count.add_argument(
        "--method", choices=["dp", "walk", "formula", "all"], default="all"
    )
    count.set_defaults(func=cmd_count)

    table = sub.add_parser("family-table", help="closed-form counts for n=1..N")
    table.add_argument("--family", required=True)
    table.add_argument("--m", type=int)
    table.add_argument("--n-max", type=int, required=True)
    table.add_argument("--format", choices=["text", "csv", "json"], default="text")
    table.set_defaults(func=cmd_family_table)

    verify = sub.add_parser("verify", help="machine-verify one claim")
    verify.add_argument("--claim", required=True)
    verify.add_argument("--n-max", type=int)
    verify.add_argument("--terms", type=int)
    verify.add_argument("--tol", type=float)
    verify.add_argument("--points", help="comma-separated n values (asymptotic)")
    verify.add_argument("--random", type=int, default=0,
                        help="extra random graphs (oracle-equivalence)")
    verify.add_argument("--seed", type=int, default=0)
    verify.set_defaults(func=cmd_verify)

    series = sub.add_parser("series", help="expand a generating function")
    series.add_argument("--egf", choices=list(handlers.SERIES_IDS), required=True)
    series.add_argument("--terms", type=int, default=25)
    series.set_defaults(func=cmd_series)

    info = sub.add_parser("info", help="tool metadata, limits, claim ids")
    info.set_defaults(func=cmd_info)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RequestError as error:
        print(f"error: {error}", file=sys.stderr)
        return _exit_code_for_error(error)
    except httpx.HTTPError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
