"""HTTP surface: one stateless endpoint per operation.

The handlers are plain functions over the pydantic models; the CLI calls
them in-process, the FastAPI app exposes them over HTTP.  All rationals
travel as "p/q" strings and identical requests produce identical responses.
"""
from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from ..algebra import Generator, Series, weight
from ..dimension import verify_branching, weyl_dimension
from ..extension import enumerate_tableaux_n, vector_of_tableau_n, weight_of_tableau_n
from ..highest import check_defining_conditions, highest_vector
from ..minors import LeftShift, left_act, poly_from_json, poly_to_json, right_act
from ..oracle import verify_relation_suite
from ..rank2 import is_g1_highest_admissible
from .models import (
    ActRequest,
    ActResponse,
    BasisItem,
    BasisRequest,
    BasisResponse,
    DimRequest,
    DimResponse,
    ErrorBody,
    ErrorResponse,
    HvRequest,
    HvResponse,
    RelationsRequest,
    RelationsResponse,
    TableauxRequest,
    TableauxResponse,
    VerifyRequest,
    VerifyResponse,
)


class RequestError(ValueError):
    """Invalid parameters (unknown series, malformed weight, bad operator)."""


def _series_weight(params) -> tuple[Series, "weight"]:
    try:
        series = Series(params.series, params.n)
        w = weight(series, params.m)
    except ValueError as exc:
        raise RequestError(str(exc)) from exc
    return series, w


def handle_hv(req: HvRequest) -> HvResponse:
    series, w = _series_weight(req)
    v = highest_vector(w, series)
    report = None
    if req.check:
        report = check_defining_conditions(v, w, series, trials=req.trials, seed=req.seed).to_json()
    return HvResponse(polynomial=poly_to_json(v, series.n), report=report)


def handle_tableaux(req: TableauxRequest) -> TableauxResponse:
    series, w = _series_weight(req)
    tableaux = enumerate_tableaux_n(series, w)
    return TableauxResponse(count=len(tableaux), tableaux=[t.to_json() for t in tableaux])


def handle_basis(req: BasisRequest) -> BasisResponse:
    series, w = _series_weight(req)
    tableaux = enumerate_tableaux_n(series, w)
    items = []
    for t in tableaux:
        v = vector_of_tableau_n(t)
        srow, comp = weight_of_tableau_n(t)
        checks = None
        if req.verify:
            from ..algebra import subalgebra_generators
            from ..oracle import zero_test

            ann = True
            for g in subalgebra_generators(series).raising:
                acted = right_act(g, v, series)
                if acted.is_zero():
                    continue
                if not zero_test(acted, series, trials=req.trials, seed=req.seed).is_zero:
                    ann = False
                    break
            adm = is_g1_highest_admissible(v, w, series)
            checks = {"annihilated": ann, "admissible": adm.ok, "laurent": adm.laurent}
        items.append(
            BasisItem(
                tableau=t.to_json(),
                weight={
                    "s_row": [str(x) for x in srow],
                    "component": str(comp),
                },
                polynomial=poly_to_json(v, series.n),
                checks=checks,
            )
        )
    return BasisResponse(count=len(items), items=items)


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    series, w = _series_weight(req)
    report = verify_branching(series, w, trials=req.trials, seed=req.seed, jobs=req.jobs)
    return VerifyResponse(report=report)


def handle_dim(req: DimRequest) -> DimResponse:
    series, w = _series_weight(req)
    return DimResponse(dim=weyl_dimension(series, w))


def parse_operator(op: str):
    """Operator labels: 'F:1,-1' / 'E:-2,-1' for right shifts, 'L:a,b' for
    left shifts."""
    try:
        kind, body = op.split(":", 1)
        i_s, j_s = body.split(",")
        i, j = int(i_s), int(j_s)
    except ValueError as exc:
        raise RequestError(f"cannot parse operator {op!r}") from exc
    kind = kind.strip().upper()
    if kind not in ("E", "F", "L"):
        raise RequestError(f"unknown operator kind {kind!r}")
    return kind, i, j


def handle_act(req: ActRequest) -> ActResponse:
    try:
        series = Series(req.series, req.n)
        poly = poly_from_json(req.polynomial)
    except (ValueError, KeyError, TypeError) as exc:
        raise RequestError(str(exc)) from exc
    kind, i, j = parse_operator(req.op)
    try:
        if kind == "L":
            out = left_act(LeftShift(i, j), poly, series)
        else:
            out = right_act(Generator(kind, i, j), poly, series)
    except ValueError as exc:
        raise RequestError(str(exc)) from exc
    return ActResponse(polynomial=poly_to_json(out, series.n))


def handle_relations(req: RelationsRequest) -> RelationsResponse:
    try:
        series = Series(req.series, req.n)
    except ValueError as exc:
        raise RequestError(str(exc)) from exc
    report = verify_relation_suite(series, trials=req.trials, seed=req.seed)
    return RelationsResponse(report=report.to_json())


def create_app() -> FastAPI:
    app = FastAPI(
        title="branchkit",
        description="Exact branching bases for classical Lie algebras",
        version="0.1.0",
    )

    @app.exception_handler(RequestError)
    async def _bad_request(_, exc: RequestError):
        body = ErrorResponse(error=ErrorBody(code="invalid_request", message=str(exc)))
        return JSONResponse(status_code=422, content=body.model_dump())

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/hv", response_model=HvResponse)
    def hv(req: HvRequest) -> HvResponse:
        return handle_hv(req)

    @app.post("/tableaux", response_model=TableauxResponse)
    def tableaux(req: TableauxRequest) -> TableauxResponse:
        return handle_tableaux(req)

    @app.post("/basis", response_model=BasisResponse)
    def basis(req: BasisRequest) -> BasisResponse:
        return handle_basis(req)

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        return handle_verify(req)

    @app.post("/dim", response_model=DimResponse)
    def dim(req: DimRequest) -> DimResponse:
        return handle_dim(req)

    @app.post("/act", response_model=ActResponse)
    def act(req: ActRequest) -> ActResponse:
        return handle_act(req)

    @app.post("/relations", response_model=RelationsResponse)
    def relations(req: RelationsRequest) -> RelationsResponse:
        return handle_relations(req)

    return app


app = create_app()
