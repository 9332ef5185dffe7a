"""Command line surface: a thin client over the service handlers.

Every subcommand builds the request model, invokes the in-process handler,
and prints the JSON response; identical invocations produce byte-identical
output.  Exit status 0 on success, 1 when a verification reports failure,
2 on invalid input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .service.app import (
    RequestError,
    handle_act,
    handle_basis,
    handle_dim,
    handle_hv,
    handle_relations,
    handle_tableaux,
    handle_verify,
)
from .service.models import (
    ActRequest,
    BasisRequest,
    DimRequest,
    HvRequest,
    RelationsRequest,
    TableauxRequest,
    VerifyRequest,
)

STATUS_VERIFY_FAILED = 1
STATUS_BAD_REQUEST = 2


def _env_seed() -> int:
    raw = os.environ.get("BRANCHKIT_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        return 0


def _common(parser: argparse.ArgumentParser, weight: bool = True) -> None:
    parser.add_argument("--series", required=True, help="A, B, C or D")
    parser.add_argument("--n", required=True, type=int, help="rank")
    if weight:
        parser.add_argument("--m", required=True, help="weight entries, e.g. 2,1 or 3/2,1/2")
    parser.add_argument("--out", help="write the JSON document to this path")
    parser.add_argument(
        "--format", choices=("json", "pretty"), default="json", help="output rendering"
    )


def _weight_list(raw: str) -> list[str]:
    return [x.strip() for x in raw.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="branchkit",
        description="Exact branching bases for classical Lie algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hv", help="highest vector (optionally checked)")
    _common(p)
    p.add_argument("--check", action="store_true")
    p.add_argument("--trials", type=int, default=12)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("tableaux", help="enumerate branching tableaux")
    _common(p)

    p = sub.add_parser("basis", help="tableaux with their vectors")
    _common(p)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("verify", help="full branching verification report")
    _common(p)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("dim", help="Weyl dimension")
    _common(p)

    p = sub.add_parser("act", help="apply a shift operator to a polynomial file")
    _common(p, weight=False)
    p.add_argument("--op", required=True, help="e.g. F:1,-1 or L:-2,-1")
    p.add_argument("--poly", required=True, help="path of the polynomial JSON")

    p = sub.add_parser("relations", help="verify the determinant relation suite")
    _common(p, weight=False)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=None)

    return parser


def _emit(doc: dict, args: argparse.Namespace) -> None:
    if args.format == "pretty":
        text = json.dumps(doc, indent=2, sort_keys=True)
    else:
        text = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _error(message: str, args: argparse.Namespace) -> int:
    _emit({"error": {"code": "invalid_request", "message": message}}, args)
    return STATUS_BAD_REQUEST


def run(args: argparse.Namespace) -> int:
    seed = getattr(args, "seed", None)
    if seed is None:
        seed = _env_seed()
    try:
        if args.command == "hv":
            resp = handle_hv(
                HvRequest(
                    series=args.series,
                    n=args.n,
                    m=_weight_list(args.m),
                    check=args.check,
                    trials=args.trials,
                    seed=seed,
                )
            )
            _emit(resp.model_dump(exclude_none=True), args)
            if args.check and resp.report and not resp.report.get("pass"):
                return STATUS_VERIFY_FAILED
            return 0
        if args.command == "tableaux":
            resp = handle_tableaux(
                TableauxRequest(series=args.series, n=args.n, m=_weight_list(args.m))
            )
            _emit(resp.model_dump(), args)
            return 0
        if args.command == "basis":
            resp = handle_basis(
                BasisRequest(
                    series=args.series,
                    n=args.n,
                    m=_weight_list(args.m),
                    verify=args.verify,
                    trials=args.trials,
                    seed=seed,
                )
            )
            _emit(resp.model_dump(exclude_none=True), args)
            if args.verify and any(
                item.checks and not (item.checks["annihilated"] and item.checks["admissible"])
                for item in resp.items
            ):
                return STATUS_VERIFY_FAILED
            return 0
        if args.command == "verify":
            resp = handle_verify(
                VerifyRequest(
                    series=args.series,
                    n=args.n,
                    m=_weight_list(args.m),
                    trials=args.trials,
                    seed=seed,
                    jobs=args.jobs,
                )
            )
            _emit(resp.report, args)
            return 0 if resp.ok else STATUS_VERIFY_FAILED
        if args.command == "dim":
            resp = handle_dim(
                DimRequest(series=args.series, n=args.n, m=_weight_list(args.m))
            )
            _emit(resp.model_dump(), args)
            return 0
        if args.command == "act":
            with open(args.poly, encoding="utf-8") as fh:
                doc = json.load(fh)
            resp = handle_act(
                ActRequest(series=args.series, n=args.n, op=args.op, polynomial=doc)
            )
            _emit(resp.model_dump(), args)
            return 0
        if args.command == "relations":
            resp = handle_relations(
                RelationsRequest(series=args.series, n=args.n, trials=args.trials, seed=seed)
            )
            _emit(resp.report, args)
            return 0 if resp.ok else STATUS_VERIFY_FAILED
    except RequestError as exc:
        return _error(str(exc), args)
    except (OSError, json.JSONDecodeError) as exc:
        return _error(str(exc), args)
    except Exception as exc:  # pydantic validation of enum fields etc.
        from pydantic import ValidationError

        if isinstance(exc, ValidationError):
            return _error(exc.errors()[0].get("msg", str(exc)), args)
        raise
    return _error("unknown command", args)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
